use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::weight::Weight;
use crate::error::{Error, Result};

/// Exceptional simple algebras left out of the supported set, with the
/// dimension of their smallest nontrivial irreducible. None of them can act
/// irreducibly in dimension ≤ 9.
pub const EXCLUDED_MIN_DIMENSIONS: [(&str, u32); 4] =
    [("E6", 27), ("E7", 56), ("E8", 248), ("F4", 26)];

/// Type A is accepted beyond the catalogue so that Schur functors of
/// `SL_m` can be handled for `m` up to 20.
pub const MAX_TYPE_A_RANK: usize = 19;

const SUPPORT_NOTE: &str = "supported: A1..A19, B2..B4, C2..C4, D4, G2 \
    (E6/E7/E8/F4 are excluded: smallest nontrivial irreducibles have dimension 27/56/248/26)";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    G,
}

/// Cartan type of a simple factor, e.g. `B4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => (1..=MAX_TYPE_A_RANK).contains(&rank),
            Family::B | Family::C => (2..=4).contains(&rank),
            Family::D => rank == 4,
            Family::G => rank == 2,
        };
        if !ok {
            return Err(Error::UnsupportedType(
                format!("{family:?}{rank}"),
                SUPPORT_NOTE,
            ));
        }
        Ok(Self { family, rank })
    }

    /// The catalogue scanned by the dimension enumeration, in a fixed order:
    /// A1..A8, B2..B4, C2..C4, D4, G2. Every simple algebra with a nontrivial
    /// irreducible of dimension at most 9 is among them.
    pub fn all_supported() -> Vec<CartanType> {
        let mut out = Vec::new();
        out.extend((1..=8).map(|r| CartanType {
            family: Family::A,
            rank: r,
        }));
        out.extend((2..=4).map(|r| CartanType {
            family: Family::B,
            rank: r,
        }));
        out.extend((2..=4).map(|r| CartanType {
            family: Family::C,
            rank: r,
        }));
        out.push(CartanType {
            family: Family::D,
            rank: 4,
        });
        out.push(CartanType {
            family: Family::G,
            rank: 2,
        });
        out
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('G') => Family::G,
            _ => return Err(Error::UnsupportedType(s.to_string(), SUPPORT_NOTE)),
        };
        let rank = chars
            .as_str()
            .parse::<usize>()
            .map_err(|_| Error::Parse(format!("bad Cartan type `{s}`")))?;
        CartanType::new(family, rank)
    }
}

/// Root datum of one simple factor.
///
/// Conventions: `cartan[i][j] = ⟨α_i, α_j^∨⟩`, so row `i` is `α_i` in Dynkin
/// coordinates; `symmetrizer[j]` is proportional to `(α_j, α_j)/2`, scaled to
/// the smallest positive integers, so `(α_i, α_j) = cartan[i][j]·symmetrizer[j]`
/// and `(μ, α_j) = μ_j · symmetrizer[j]` for any weight `μ`.
#[derive(Clone, Debug)]
pub struct RootSystem {
    ty: CartanType,
    cartan: Vec<Vec<i32>>,
    symmetrizer: Vec<i64>,
    positive_roots: Vec<Vec<i32>>,
    root_weights: Vec<Weight>,
    root_pairings: Vec<Vec<i64>>,
    height_form: Vec<i64>,
    height_scale: i64,
}

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.ty == other.ty
    }
}

impl Eq for RootSystem {}

pub fn root_system(ty: CartanType) -> RootSystem {
    RootSystem::new(ty)
}

impl RootSystem {
    pub fn new(ty: CartanType) -> Self {
        let (cartan, symmetrizer) = cartan_data(ty);
        let r = ty.rank;

        // closure of the simple roots under simple reflections, positive part only
        let mut seen: BTreeSet<Vec<i32>> = BTreeSet::new();
        let mut queue: VecDeque<Vec<i32>> = VecDeque::new();
        for i in 0..r {
            let mut e = vec![0; r];
            e[i] = 1;
            seen.insert(e.clone());
            queue.push_back(e);
        }
        while let Some(beta) = queue.pop_front() {
            for i in 0..r {
                let pairing: i32 = (0..r).map(|j| beta[j] * cartan[j][i]).sum();
                let mut image = beta.clone();
                image[i] -= pairing;
                if image.iter().all(|&c| c >= 0) && seen.insert(image.clone()) {
                    queue.push_back(image);
                }
            }
        }
        let mut positive_roots: Vec<Vec<i32>> = seen.into_iter().collect();
        positive_roots.sort_by_key(|c| (c.iter().sum::<i32>(), c.clone()));

        let root_weights = positive_roots
            .iter()
            .map(|c| {
                Weight(
                    (0..r)
                        .map(|j| (0..r).map(|i| c[i] * cartan[i][j]).sum())
                        .collect(),
                )
            })
            .collect();
        let root_pairings = positive_roots
            .iter()
            .map(|c| (0..r).map(|j| i64::from(c[j]) * symmetrizer[j]).collect())
            .collect();
        let (height_form, height_scale) = height_form(&cartan);

        Self {
            ty,
            cartan,
            symmetrizer,
            positive_roots,
            root_weights,
            root_pairings,
            height_form,
            height_scale,
        }
    }

    pub fn cartan_type(&self) -> CartanType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank
    }

    pub fn cartan_matrix(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    /// Positive roots in simple-root coordinates, sorted by height.
    pub fn positive_roots(&self) -> &[Vec<i32>] {
        &self.positive_roots
    }

    /// Positive roots in Dynkin coordinates, parallel to [`Self::positive_roots`].
    pub fn positive_root_weights(&self) -> &[Weight] {
        &self.root_weights
    }

    /// `ρ = (1, …, 1)` in Dynkin coordinates.
    pub fn weyl_vector(&self) -> Weight {
        Weight(vec![1; self.rank()])
    }

    pub fn simple_root(&self, i: usize) -> &[i32] {
        &self.cartan[i]
    }

    /// `(x, α)` for the `idx`-th positive root, in symmetrizer units.
    pub fn pair_with_root(&self, x: &[i32], idx: usize) -> i64 {
        self.root_pairings[idx]
            .iter()
            .zip(x)
            .map(|(p, &c)| p * i64::from(c))
            .sum()
    }

    /// `(x, Σ n_i α_i)` for a combination of simple roots.
    pub fn pair_with_root_combination(&self, x: &[i32], n: &[i32]) -> i64 {
        (0..self.rank())
            .map(|i| i64::from(n[i]) * self.symmetrizer[i] * i64::from(x[i]))
            .sum()
    }

    /// Height in root coordinates, scaled by [`Self::height_scale`] so it is an
    /// integer: `α_i` has scaled height `height_scale` for every `i`.
    pub fn scaled_height(&self, x: &[i32]) -> i64 {
        self.height_form
            .iter()
            .zip(x)
            .map(|(h, &c)| h * i64::from(c))
            .sum()
    }

    pub fn height_scale(&self) -> i64 {
        self.height_scale
    }

    pub fn check_weight(&self, w: &[i32]) -> Result<()> {
        if w.len() != self.rank() {
            return Err(Error::RankMismatch {
                weight: Weight::from(w).to_string(),
                got: w.len(),
                expected: self.rank(),
            });
        }
        Ok(())
    }

    /// Simple reflection `s_i` applied in place.
    pub fn reflect(&self, x: &mut [i32], i: usize) {
        let c = x[i];
        if c != 0 {
            for (xj, aj) in x.iter_mut().zip(&self.cartan[i]) {
                *xj -= c * aj;
            }
        }
    }

    /// Moves `x` into the dominant chamber in place.
    pub fn make_dominant(&self, x: &mut [i32]) {
        while let Some(i) = x.iter().position(|&c| c < 0) {
            self.reflect(x, i);
        }
    }

    pub fn dominant_representative(&self, x: &[i32]) -> Weight {
        let mut w = x.to_vec();
        self.make_dominant(&mut w);
        Weight(w)
    }

    /// Full Weyl orbit of a dominant weight.
    pub fn orbit(&self, dominant: &[i32]) -> Vec<Weight> {
        let start = dominant.to_vec();
        let mut seen: HashSet<Vec<i32>> = HashSet::new();
        seen.insert(start.clone());
        let mut stack = vec![start];
        let mut out = Vec::new();
        while let Some(x) = stack.pop() {
            for i in 0..self.rank() {
                if x[i] > 0 {
                    let mut y = x.clone();
                    self.reflect(&mut y, i);
                    if seen.insert(y.clone()) {
                        stack.push(y);
                    }
                }
            }
            out.push(Weight(x));
        }
        out
    }

    pub fn weyl_group_order(&self) -> BigUint {
        let all: Vec<usize> = (0..self.rank()).collect();
        parabolic_order(&self.cartan, &all)
    }

    /// `|W·μ| = |W| / |W_μ|` for dominant `μ`, where `W_μ` is the parabolic
    /// subgroup generated by the reflections fixing `μ`.
    pub fn orbit_size(&self, dominant: &[i32]) -> BigUint {
        let stabilizer: Vec<usize> = (0..self.rank()).filter(|&i| dominant[i] == 0).collect();
        self.weyl_group_order() / parabolic_order(&self.cartan, &stabilizer)
    }

    /// Highest weight of the dual representation, `−w₀λ`.
    pub fn dual_weight(&self, lambda: &[i32]) -> Weight {
        let neg: Vec<i32> = lambda.iter().map(|c| -c).collect();
        self.dominant_representative(&neg)
    }
}

fn cartan_data(ty: CartanType) -> (Vec<Vec<i32>>, Vec<i64>) {
    let r = ty.rank;
    let mut a = vec![vec![0i32; r]; r];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let chain = |a: &mut Vec<Vec<i32>>, upto: usize| {
        for i in 0..upto.saturating_sub(1) {
            a[i][i + 1] = -1;
            a[i + 1][i] = -1;
        }
    };
    let mut d = vec![1i64; r];
    match ty.family {
        Family::A => chain(&mut a, r),
        Family::B => {
            // α_r short
            chain(&mut a, r);
            a[r - 2][r - 1] = -2;
            d = vec![2; r];
            d[r - 1] = 1;
        }
        Family::C => {
            // α_r long
            chain(&mut a, r);
            a[r - 1][r - 2] = -2;
            d[r - 1] = 2;
        }
        Family::D => {
            // chain α_1 … α_{r−1}, with α_r attached to α_{r−2}
            chain(&mut a, r - 1);
            a[r - 1][r - 3] = -1;
            a[r - 3][r - 1] = -1;
        }
        Family::G => {
            // α_1 short
            a[0][1] = -1;
            a[1][0] = -3;
            d = vec![1, 3];
        }
    }
    (a, d)
}

/// Integer vector `h` and scale `N` with `h · α_i = N` for every simple root
/// (in Dynkin coordinates), i.e. `h·x / N` is the height of `x` in root
/// coordinates.
fn height_form(cartan: &[Vec<i32>]) -> (Vec<i64>, i64) {
    let r = cartan.len();
    // solve cartan · h = 1 over Q by Gauss-Jordan
    let mut m: Vec<Vec<Rational64>> = cartan
        .iter()
        .map(|row| {
            let mut v: Vec<Rational64> = row
                .iter()
                .map(|&c| Rational64::from(i64::from(c)))
                .collect();
            v.push(Rational64::one());
            v
        })
        .collect();
    for col in 0..r {
        let pivot = (col..r)
            .find(|&i| !m[i][col].is_zero())
            .expect("Cartan matrix is nonsingular");
        m.swap(col, pivot);
        let inv = m[col][col].recip();
        for v in m[col].iter_mut() {
            *v *= inv;
        }
        let pivot = m[col].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != col && !row[col].is_zero() {
                let f = row[col];
                for (x, p) in row.iter_mut().zip(&pivot) {
                    *x -= f * p;
                }
            }
        }
    }
    let sol: Vec<Rational64> = m.iter().map(|row| row[r]).collect();
    let scale = sol.iter().fold(1i64, |acc, q| acc.lcm(q.denom()));
    let h = sol
        .iter()
        .map(|q| q.numer() * (scale / q.denom()))
        .collect();
    (h, scale)
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// Order of the Weyl group generated by the simple reflections in `nodes`.
fn parabolic_order(cartan: &[Vec<i32>], nodes: &[usize]) -> BigUint {
    let in_set: HashSet<usize> = nodes.iter().copied().collect();
    let mut visited = HashSet::new();
    let mut order = BigUint::one();
    for &start in nodes {
        if !visited.insert(start) {
            continue;
        }
        let mut comp = vec![start];
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for &j in nodes {
                if cartan[i][j] != 0 && i != j && in_set.contains(&j) && visited.insert(j) {
                    comp.push(j);
                    stack.push(j);
                }
            }
        }
        let n = comp.len();
        let entries = comp
            .iter()
            .flat_map(|&i| comp.iter().map(move |&j| cartan[i][j]));
        let min_entry = entries.clone().filter(|&c| c < 0).min().unwrap_or(0);
        let branch = comp.iter().any(|&i| {
            comp.iter()
                .filter(|&&j| j != i && cartan[i][j] != 0)
                .count()
                >= 3
        });
        let comp_order = if n == 1 {
            BigUint::from(2u32)
        } else if min_entry == -3 {
            BigUint::from(12u32)
        } else if min_entry == -2 {
            (BigUint::one() << n) * factorial(n)
        } else if branch {
            (BigUint::one() << (n - 1)) * factorial(n)
        } else {
            factorial(n + 1)
        };
        order *= comp_order;
    }
    order
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(s: &str) -> CartanType {
        s.parse().unwrap()
    }

    #[test]
    fn positive_root_counts() {
        for t in CartanType::all_supported() {
            let rs = RootSystem::new(t);
            let r = t.rank;
            let expected = match t.family {
                Family::A => r * (r + 1) / 2,
                Family::B | Family::C => r * r,
                Family::D => r * (r - 1),
                Family::G => 6,
            };
            assert_eq!(rs.positive_roots().len(), expected, "{t}");
        }
        assert_eq!(RootSystem::new(ty("A2")).positive_roots().len(), 3);
        assert_eq!(RootSystem::new(ty("B4")).positive_roots().len(), 16);
    }

    #[test]
    fn cartan_matrices_are_symmetrizable_and_positive_definite() {
        for t in CartanType::all_supported() {
            let rs = RootSystem::new(t);
            let a = rs.cartan_matrix();
            let d = rs.symmetrizer();
            let r = t.rank;
            for i in 0..r {
                assert_eq!(a[i][i], 2);
                for j in 0..r {
                    if i != j {
                        assert!(a[i][j] <= 0);
                    }
                    assert_eq!(
                        i64::from(a[i][j]) * d[j],
                        i64::from(a[j][i]) * d[i],
                        "{t} not symmetric at {i},{j}"
                    );
                }
            }
            // leading principal minors of the symmetric form (Sylvester)
            let g: Vec<Vec<Rational64>> = (0..r)
                .map(|i| {
                    (0..r)
                        .map(|j| Rational64::from(i64::from(a[i][j]) * d[j]))
                        .collect()
                })
                .collect();
            for k in 1..=r {
                assert!(det(&g, k) > Rational64::zero(), "{t} minor {k}");
            }
        }
    }

    fn det(g: &[Vec<Rational64>], k: usize) -> Rational64 {
        let mut m: Vec<Vec<Rational64>> = g[..k].iter().map(|row| row[..k].to_vec()).collect();
        let mut d = Rational64::one();
        for c in 0..k {
            let Some(p) = (c..k).find(|&i| !m[i][c].is_zero()) else {
                return Rational64::zero();
            };
            if p != c {
                m.swap(p, c);
                d = -d;
            }
            d *= m[c][c];
            let pivot = m[c].clone();
            for row in &mut m[c + 1..k] {
                let f = row[c] / pivot[c];
                for (x, p) in row[c..].iter_mut().zip(&pivot[c..]) {
                    *x -= f * p;
                }
            }
        }
        d
    }

    #[test]
    fn simple_roots_have_unit_height() {
        for t in CartanType::all_supported() {
            let rs = RootSystem::new(t);
            assert!(rs.height_form.iter().all(|&h| h > 0));
            for i in 0..t.rank {
                assert_eq!(rs.scaled_height(rs.simple_root(i)), rs.height_scale());
            }
            for (c, w) in rs.positive_roots().iter().zip(rs.positive_root_weights()) {
                let ht: i32 = c.iter().sum();
                assert_eq!(
                    rs.scaled_height(w.coords()),
                    i64::from(ht) * rs.height_scale()
                );
            }
        }
    }

    #[test]
    fn weyl_group_orders() {
        let cases = [
            ("A1", 2u64),
            ("A2", 6),
            ("A8", 362_880),
            ("B2", 8),
            ("B4", 384),
            ("C3", 48),
            ("D4", 192),
            ("G2", 12),
        ];
        for (name, order) in cases {
            assert_eq!(
                RootSystem::new(ty(name)).weyl_group_order(),
                BigUint::from(order)
            );
        }
    }

    #[test]
    fn orbit_size_matches_enumeration() {
        for t in CartanType::all_supported()
            .into_iter()
            .filter(|t| t.rank <= 4)
        {
            let rs = RootSystem::new(t);
            let r = t.rank;
            for mask in 0..(1u32 << r) {
                let mu: Vec<i32> = (0..r)
                    .map(|i| ((mask >> i) & 1) as i32 * (i as i32 + 1))
                    .collect();
                let orbit = rs.orbit(&mu);
                assert_eq!(BigUint::from(orbit.len()), rs.orbit_size(&mu), "{t} {mu:?}");
                for w in &orbit {
                    assert_eq!(rs.dominant_representative(w.coords()).coords(), &mu[..]);
                }
            }
        }
        // regular orbit is the whole group
        let rs = RootSystem::new(ty("G2"));
        assert_eq!(rs.orbit(&[1, 1]).len(), 12);
    }

    #[test]
    fn dual_weights() {
        let a3 = RootSystem::new(ty("A3"));
        assert_eq!(a3.dual_weight(&[1, 2, 0]), Weight(vec![0, 2, 1]));
        let b4 = RootSystem::new(ty("B4"));
        assert_eq!(b4.dual_weight(&[1, 0, 0, 1]), Weight(vec![1, 0, 0, 1]));
        let d4 = RootSystem::new(ty("D4"));
        assert_eq!(d4.dual_weight(&[0, 0, 1, 0]), Weight(vec![0, 0, 1, 0]));
    }

    #[test]
    fn unsupported_types_are_rejected() {
        assert!(matches!(
            "E6".parse::<CartanType>(),
            Err(Error::UnsupportedType(..))
        ));
        assert!(matches!(
            "A20".parse::<CartanType>(),
            Err(Error::UnsupportedType(..))
        ));
        assert!(matches!(
            "A0".parse::<CartanType>(),
            Err(Error::UnsupportedType(..))
        ));
        assert_eq!("A14".parse::<CartanType>().unwrap().rank, 14);
        assert!(matches!(
            "D5".parse::<CartanType>(),
            Err(Error::UnsupportedType(..))
        ));
        assert!(matches!(
            "B1".parse::<CartanType>(),
            Err(Error::UnsupportedType(..))
        ));
        let msg = "F4".parse::<CartanType>().unwrap_err().to_string();
        assert!(msg.contains("26"), "{msg}");
    }
}
