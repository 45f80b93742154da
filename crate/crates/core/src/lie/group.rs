use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use super::root_system::{CartanType, RootSystem};
use super::weight::Weight;
use crate::error::{Error, Result};

/// A semisimple group given as a product of simple factors. Weights of the
/// product are concatenations of per-factor Dynkin coordinates. The empty
/// product is the trivial group, whose only weight is `[]`.
#[derive(Clone, Debug)]
pub struct Group {
    factors: Vec<Arc<RootSystem>>,
    offsets: Vec<usize>,
    rank: usize,
    /// Per-factor multiplier bringing scaled heights to a common scale.
    height_multipliers: Vec<i64>,
}

impl PartialEq for Group {
    fn eq(&self, other: &Self) -> bool {
        self.cartan_types() == other.cartan_types()
    }
}

impl Eq for Group {}

impl Group {
    pub fn trivial() -> Self {
        Self::from_root_systems(Vec::new())
    }

    pub fn simple(ty: CartanType) -> Self {
        Self::product(&[ty])
    }

    /// `SL_m`, i.e. `A_{m−1}`; `SL_1` is the trivial group.
    pub fn special_linear(m: usize) -> Result<Self> {
        match m {
            0 => Err(Error::InvalidArgument("SL_m needs m >= 1".to_string())),
            1 => Ok(Self::trivial()),
            _ => Ok(Self::simple(CartanType::new(
                super::root_system::Family::A,
                m - 1,
            )?)),
        }
    }

    pub fn product(types: &[CartanType]) -> Self {
        Self::from_root_systems(
            types
                .iter()
                .map(|&t| Arc::new(RootSystem::new(t)))
                .collect(),
        )
    }

    pub fn from_root_systems(factors: Vec<Arc<RootSystem>>) -> Self {
        let mut offsets = Vec::with_capacity(factors.len());
        let mut rank = 0;
        for f in &factors {
            offsets.push(rank);
            rank += f.rank();
        }
        let common = factors
            .iter()
            .fold(1i64, |acc, f| acc.lcm(&f.height_scale()));
        let height_multipliers = factors.iter().map(|f| common / f.height_scale()).collect();
        Self {
            factors,
            offsets,
            rank,
            height_multipliers,
        }
    }

    /// Product group `self × other`.
    pub fn times(&self, other: &Group) -> Group {
        let mut f = self.factors.clone();
        f.extend(other.factors.iter().cloned());
        Self::from_root_systems(f)
    }

    pub fn factors(&self) -> &[Arc<RootSystem>] {
        &self.factors
    }

    pub fn cartan_types(&self) -> Vec<CartanType> {
        self.factors.iter().map(|f| f.cartan_type()).collect()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn check_weight(&self, w: &[i32]) -> Result<()> {
        if w.len() != self.rank {
            return Err(Error::RankMismatch {
                weight: Weight::from(w).to_string(),
                got: w.len(),
                expected: self.rank,
            });
        }
        Ok(())
    }

    /// Per-factor slices of a weight.
    pub fn split<'a>(
        &'a self,
        w: &'a [i32],
    ) -> impl Iterator<Item = (&'a RootSystem, &'a [i32])> + 'a {
        self.factors
            .iter()
            .zip(&self.offsets)
            .map(move |(f, &o)| (f.as_ref(), &w[o..o + f.rank()]))
    }

    pub fn make_dominant(&self, x: &mut [i32]) {
        for (f, &o) in self.factors.iter().zip(&self.offsets) {
            f.make_dominant(&mut x[o..o + f.rank()]);
        }
    }

    pub fn dominant_representative(&self, x: &[i32]) -> Weight {
        let mut w = x.to_vec();
        self.make_dominant(&mut w);
        Weight(w)
    }

    /// Height in root coordinates, scaled by a group-wide positive constant.
    /// Strictly decreases along `μ ↦ μ − α` for every positive root `α`.
    pub fn height(&self, w: &[i32]) -> i64 {
        self.split(w)
            .zip(&self.height_multipliers)
            .map(|((f, x), m)| f.scaled_height(x) * m)
            .sum()
    }

    /// Number of simple reflections (the total rank).
    pub fn num_reflections(&self) -> usize {
        self.rank
    }

    /// Simple reflection with global index `k` applied in place.
    pub fn reflect(&self, x: &mut [i32], k: usize) {
        let (fi, &o) = self
            .offsets
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &o)| o <= k)
            .expect("reflection index in range");
        let f = &self.factors[fi];
        f.reflect(&mut x[o..o + f.rank()], k - o);
    }

    pub fn orbit_size(&self, dominant: &[i32]) -> BigUint {
        self.split(dominant)
            .map(|(f, x)| f.orbit_size(x))
            .fold(BigUint::one(), |acc, s| acc * s)
    }

    /// Full Weyl orbit of a dominant weight (cartesian product of factor orbits).
    pub fn orbit(&self, dominant: &[i32]) -> Vec<Weight> {
        let mut out = vec![Weight(Vec::with_capacity(self.rank))];
        for (f, x) in self.split(dominant) {
            let orbit = f.orbit(x);
            out = out
                .iter()
                .flat_map(|prefix| orbit.iter().map(move |w| prefix.concat(w)))
                .collect();
        }
        out
    }

    /// Highest weight of the dual of the irreducible with highest weight `λ`.
    pub fn dual_weight(&self, lambda: &[i32]) -> Weight {
        let mut out = Vec::with_capacity(self.rank);
        for (f, x) in self.split(lambda) {
            out.extend(f.dual_weight(x).0);
        }
        Weight(out)
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "trivial");
        }
        for (i, t) in self.cartan_types().iter().enumerate() {
            if i > 0 {
                write!(f, "×")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(s: &str) -> CartanType {
        s.parse().unwrap()
    }

    #[test]
    fn product_bookkeeping() {
        let g = Group::product(&[ty("A1"), ty("A2")]);
        assert_eq!(g.rank(), 3);
        assert_eq!(g.to_string(), "A1×A2");
        let parts: Vec<_> = g.split(&[2, 1, 0]).map(|(_, x)| x.to_vec()).collect();
        assert_eq!(parts, vec![vec![2], vec![1, 0]]);
        assert_eq!(g.orbit_size(&[2, 1, 0]), BigUint::from(6u32));
        assert_eq!(g.orbit(&[2, 1, 0]).len(), 6);
        assert_eq!(g.dual_weight(&[2, 1, 0]), Weight(vec![2, 0, 1]));
        assert!(Group::trivial().is_trivial());
        assert_eq!(Group::trivial().orbit(&[]), vec![Weight(vec![])]);
    }

    #[test]
    fn reflections_are_involutions() {
        let g = Group::product(&[ty("B2"), ty("G2")]);
        let w = vec![1, -2, 3, 1];
        for k in 0..g.num_reflections() {
            let mut x = w.clone();
            g.reflect(&mut x, k);
            g.reflect(&mut x, k);
            assert_eq!(x, w);
        }
    }

    #[test]
    fn height_decreases_along_positive_roots() {
        let g = Group::product(&[ty("B3"), ty("G2")]);
        let mu = vec![3, 1, 2, 1, 4];
        for (fi, f) in g.factors().iter().enumerate() {
            let offset: usize = g.factors()[..fi].iter().map(|f| f.rank()).sum();
            for root in f.positive_root_weights() {
                let mut nu = mu.clone();
                for (j, c) in root.coords().iter().enumerate() {
                    nu[offset + j] -= c;
                }
                assert!(g.height(&nu) < g.height(&mu));
            }
        }
    }
}
