use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use super::{GraphPoint, MetricGraph};
use crate::Result;

/// A finite integer combination of points; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Divisor {
    coeffs: BTreeMap<GraphPoint, i64>,
}

impl Divisor {
    pub fn zero() -> Self {
        Divisor::default()
    }

    pub fn point(p: GraphPoint) -> Self {
        Divisor::from_entries([(p, 1)])
    }

    /// Sums the coefficients of repeated points.
    pub fn from_entries(entries: impl IntoIterator<Item = (GraphPoint, i64)>) -> Self {
        let mut d = Divisor::zero();
        for (p, c) in entries {
            d.add_at(p, c);
        }
        d
    }

    pub fn add_at(&mut self, p: GraphPoint, c: i64) {
        let slot = self.coeffs.entry(p.clone()).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.coeffs.remove(&p);
        }
    }

    pub fn get(&self, p: &GraphPoint) -> i64 {
        self.coeffs.get(p).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&GraphPoint, i64)> {
        self.coeffs.iter().map(|(p, c)| (p, *c))
    }

    pub fn support(&self) -> impl Iterator<Item = &GraphPoint> {
        self.coeffs.keys()
    }

    pub fn degree(&self) -> i64 {
        self.coeffs.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_effective(&self) -> bool {
        self.coeffs.values().all(|&c| c >= 0)
    }

    pub fn check_on(&self, g: &MetricGraph) -> Result<()> {
        self.support().try_for_each(|p| g.check_point(p))
    }
}

impl Add for &Divisor {
    type Output = Divisor;

    fn add(self, rhs: &Divisor) -> Divisor {
        let mut out = self.clone();
        for (p, c) in rhs.iter() {
            out.add_at(p.clone(), c);
        }
        out
    }
}

impl Neg for &Divisor {
    type Output = Divisor;

    fn neg(self) -> Divisor {
        Divisor { coeffs: self.coeffs.iter().map(|(p, c)| (p.clone(), -c)).collect() }
    }
}

impl Sub for &Divisor {
    type Output = Divisor;

    fn sub(self, rhs: &Divisor) -> Divisor {
        self + &(-rhs)
    }
}
