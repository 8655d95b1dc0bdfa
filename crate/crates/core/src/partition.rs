//! Exact piecewise-linear fuzzy sets and the classes a family of them realizes.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};

use crate::class::AssignmentClass;
use crate::error::{Error, Result};
use crate::forest::{Forest, Subforest};
use crate::truth::{format_rational, ratio, Rational, TruthValue};

/// A membership function `[0,1] → [0,1]` given by breakpoints.
///
/// Consecutive points with distinct abscissae are joined linearly. Two points
/// sharing an abscissa encode a jump; the function takes the second value
/// there (right-continuous), and at `x = 1` the last listed value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiecewiseLinearFuzzySet {
    name: String,
    points: Vec<(Rational, Rational)>,
}

impl PiecewiseLinearFuzzySet {
    pub fn new(name: impl Into<String>, points: Vec<(Rational, Rational)>) -> Result<Self> {
        let name = name.into();
        // points are reported 1-based
        let invalid = |point: Option<usize>, reason: String| Error::InvalidFuzzySet {
            set: name.clone(),
            point: point.map(|i| i + 1),
            reason,
        };
        if points.len() < 2 {
            return Err(invalid(None, "needs at least two points".into()));
        }
        let unit = |r: &Rational| *r >= Rational::zero() && *r <= Rational::one();
        for (i, (x, y)) in points.iter().enumerate() {
            if !unit(x) {
                return Err(invalid(Some(i), format!("abscissa {} outside [0,1]", format_rational(x))));
            }
            if !unit(y) {
                return Err(invalid(Some(i), format!("value {} outside [0,1]", format_rational(y))));
            }
            if i > 0 && points[i - 1].0 > *x {
                return Err(invalid(Some(i), "abscissae must be nondecreasing".into()));
            }
            if i > 1 && points[i - 2].0 == *x {
                return Err(invalid(Some(i), "more than two points share an abscissa".into()));
            }
        }
        if !points[0].0.is_zero() {
            return Err(invalid(Some(0), "first abscissa must be 0".into()));
        }
        if !points[points.len() - 1].0.is_one() {
            return Err(invalid(Some(points.len() - 1), "last abscissa must be 1".into()));
        }
        Ok(PiecewiseLinearFuzzySet { name, points })
    }

    /// The constant function `value`.
    pub fn constant(name: impl Into<String>, value: Rational) -> Result<Self> {
        Self::new(name, vec![(Rational::zero(), value.clone()), (Rational::one(), value)])
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn points(&self) -> &[(Rational, Rational)] {
        &self.points
    }

    pub fn breakpoints(&self) -> impl Iterator<Item = &Rational> {
        self.points.iter().map(|(x, _)| x)
    }

    fn interpolate(&self, x: &Rational) -> Rational {
        let k = self.points.partition_point(|(px, _)| px < x);
        let (x0, y0) = &self.points[k - 1];
        let (x1, y1) = &self.points[k];
        y0 + (y1 - y0) * (x - x0) / (x1 - x0)
    }

    fn check_domain(x: &Rational) -> Result<()> {
        if *x < Rational::zero() || *x > Rational::one() {
            return Err(Error::OutsideDomain(format_rational(x)));
        }
        Ok(())
    }

    /// Membership degree at `x`.
    pub fn eval(&self, x: &Rational) -> Result<TruthValue> {
        Self::check_domain(x)?;
        let value = match self.points.iter().rposition(|(px, _)| px == x) {
            Some(i) => self.points[i].1.clone(),
            None => self.interpolate(x),
        };
        TruthValue::new(value)
    }

    /// Limit from the left at `x > 0`.
    pub fn left_limit(&self, x: &Rational) -> Result<TruthValue> {
        Self::check_domain(x)?;
        if x.is_zero() {
            return Err(Error::OutsideDomain("left limit at 0".into()));
        }
        let value = match self.points.iter().position(|(px, _)| px == x) {
            Some(i) => self.points[i].1.clone(),
            None => self.interpolate(x),
        };
        TruthValue::new(value)
    }

    /// Points of `(0,1]` where the value differs from the left limit.
    pub fn discontinuities(&self) -> Vec<Rational> {
        self.points
            .windows(2)
            .filter(|w| w[0].0 == w[1].0 && w[0].1 != w[1].1 && !w[0].0.is_zero())
            .map(|w| w[0].0.clone())
            .collect()
    }
}

/// A finite nonempty family `f1..fn` of fuzzy sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    sets: Vec<PiecewiseLinearFuzzySet>,
}

impl Partition {
    pub fn new(sets: Vec<PiecewiseLinearFuzzySet>) -> Result<Self> {
        if sets.is_empty() {
            return Err(Error::InvalidPartition("a partition needs at least one fuzzy set".into()));
        }
        Ok(Partition { sets })
    }

    pub fn n(&self) -> usize {
        self.sets.len()
    }

    pub fn sets(&self) -> &[PiecewiseLinearFuzzySet] {
        &self.sets
    }

    pub fn values_at(&self, x: &Rational) -> Result<Vec<TruthValue>> {
        self.sets.iter().map(|f| f.eval(x)).collect()
    }

    /// The class realized at `x`.
    pub fn class_at(&self, x: &Rational) -> Result<AssignmentClass> {
        AssignmentClass::of_values(&self.values_at(x)?)
    }

    /// All abscissae where some set has a breakpoint, ascending, including 0 and 1.
    fn abscissae(&self) -> Vec<Rational> {
        let all: BTreeSet<Rational> = self.sets.iter().flat_map(|f| f.breakpoints().cloned()).collect();
        all.into_iter().collect()
    }

    /// Abscissae where the realized class can change: every breakpoint, and
    /// inside each linear piece every point where two sets cross or a set
    /// meets 0 or 1.
    pub fn critical_points(&self) -> Vec<Rational> {
        let cuts = self.abscissae();
        let mut points: BTreeSet<Rational> = cuts.iter().cloned().collect();
        for w in cuts.windows(2) {
            let (a, b) = (&w[0], &w[1]);
            let p = a + (b - a) * ratio(1, 3);
            let q = a + (b - a) * ratio(2, 3);
            let at = |x: &Rational| -> Vec<Rational> {
                self.sets.iter().map(|f| f.interpolate(x)).collect()
            };
            let (vp, vq) = (at(&p), at(&q));
            // every affine function whose zeros matter on this piece, as (h(p), h(q))
            let mut lines: Vec<(Rational, Rational)> = Vec::new();
            for i in 0..self.n() {
                lines.push((vp[i].clone(), vq[i].clone()));
                lines.push((&vp[i] - Rational::one(), &vq[i] - Rational::one()));
                for j in i + 1..self.n() {
                    lines.push((&vp[i] - &vp[j], &vq[i] - &vq[j]));
                }
            }
            for (hp, hq) in lines {
                if hp == hq {
                    continue;
                }
                let root = &p - &hp * (&q - &p) / (&hq - &hp);
                if &root > a && &root < b {
                    points.insert(root);
                }
            }
        }
        points.into_iter().collect()
    }

    /// Every class realized somewhere on `[0,1]`, each with the smallest
    /// sampled abscissa that realizes it.
    ///
    /// Samples every critical point and the midpoint between consecutive
    /// critical points; the class is constant on each open gap.
    pub fn realized_classes_with_witnesses(&self) -> Result<BTreeMap<AssignmentClass, Rational>> {
        let critical = self.critical_points();
        let mut samples = Vec::with_capacity(2 * critical.len());
        for (i, x) in critical.iter().enumerate() {
            samples.push(x.clone());
            if let Some(next) = critical.get(i + 1) {
                samples.push((x + next) * ratio(1, 2));
            }
        }
        samples.sort();
        let mut out = BTreeMap::new();
        for x in samples {
            let class = self.class_at(&x)?;
            out.entry(class).or_insert(x);
        }
        Ok(out)
    }

    pub fn realized_classes(&self) -> Result<BTreeSet<AssignmentClass>> {
        Ok(self.realized_classes_with_witnesses()?.into_keys().collect())
    }

    /// `F(P)`: the downset of the realized classes.
    pub fn forest_in<'f>(&self, forest: &'f Forest) -> Result<Subforest<'f>> {
        if forest.n() != self.n() {
            return Err(Error::ArityMismatch { expected: forest.n(), found: self.n() });
        }
        let realized = self.realized_classes()?;
        let sub = forest.downset(&realized)?;
        debug_assert!(!sub.is_empty() && sub.is_downward_closed());
        Ok(sub)
    }

    /// `Σ fᵢ(x) = 1` for every `x`, decided exactly: the sum is piecewise
    /// linear, so it suffices to check the value and the left limit at every
    /// breakpoint.
    pub fn is_exact_ruspini(&self) -> Result<bool> {
        let one = Rational::one();
        for x in self.abscissae() {
            let sum = |vals: Vec<TruthValue>| -> Rational {
                vals.into_iter().map(TruthValue::into_inner).sum()
            };
            if sum(self.values_at(&x)?) != one {
                return Ok(false);
            }
            if !x.is_zero() {
                let left = self.sets.iter().map(|f| f.left_limit(&x)).collect::<Result<Vec<_>>>()?;
                if sum(left) != one {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// No point where three sets are simultaneously positive.
    pub fn is_2_overlapping(&self) -> Result<bool> {
        if self.n() <= 2 {
            return Ok(true);
        }
        Ok(self.realized_classes()?.iter().all(AssignmentClass::is_in_overlap_forest))
    }

    /// Weak Ruspini status, decided by whether `F(P)` is a Ruspini subforest.
    pub fn is_weak_ruspini(&self) -> Result<bool> {
        let forest = Forest::new(self.n())?;
        Ok(self.forest_in(&forest)?.is_ruspini())
    }
}
