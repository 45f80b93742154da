//! Seeded property suite: randomized checks of the character machinery plus
//! exhaustive small-range checks of the partition kit.

use num_bigint::{BigInt, BigUint};
use num_traits::One;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::character::{Character, SizeCap};
use crate::error::Result;
use crate::lie::{group_dimension, group_irreducible_character, CartanType, Group, Weight};
use crate::partitions::{count_bounded_partitions, gaussian_polynomial};
use crate::report::{Report, Table};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyCheck {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl PropertyCheck {
    fn new(name: &str) -> Self {
        Self {
            name: name.to_string(),
            cases: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(what());
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub seed: u64,
    pub checks: Vec<PropertyCheck>,
}

impl Report for PropertyReport {
    fn suite(&self) -> &'static str {
        "props"
    }

    fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.failures.is_empty())
    }

    fn table(&self) -> Table {
        let mut t = Table::new(
            format!("property suite, seed {}", self.seed),
            &["property", "cases", "status"],
        );
        for c in &self.checks {
            let st = if c.failures.is_empty() {
                "ok".to_string()
            } else {
                format!("FAIL ({})", c.failures.len())
            };
            t.row(vec![c.name.clone(), c.cases.to_string(), st]);
        }
        for c in &self.checks {
            for f in c.failures.iter().take(5) {
                t.note(format!("{}: {f}", c.name));
            }
        }
        t
    }
}

const FREUDENTHAL_TYPES: [&str; 10] = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "D4", "G2"];

fn ty(s: &str) -> CartanType {
    s.parse().expect("catalogue type")
}

/// Dominant weights of `group` whose irreducible has dimension in `2..=max_dim`.
fn small_irreducibles(group: &Group, max_dim: u64) -> Vec<Weight> {
    fn rec(g: &Group, max: &BigUint, i: usize, cur: &mut Vec<i32>, out: &mut Vec<Weight>) {
        if i == cur.len() {
            if cur.iter().any(|&c| c != 0) {
                out.push(Weight(cur.clone()));
            }
            return;
        }
        loop {
            // later coordinates are zero here, and the dimension grows with each one
            if &group_dimension(g, cur).expect("dominant") > max {
                break;
            }
            rec(g, max, i + 1, cur, out);
            cur[i] += 1;
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    rec(
        group,
        &BigUint::from(max_dim),
        0,
        &mut vec![0; group.rank()],
        &mut out,
    );
    out
}

fn random_dominant(rng: &mut ChaCha8Rng, group: &Group, max_dim: u64) -> Weight {
    loop {
        let w: Vec<i32> = (0..group.rank()).map(|_| rng.gen_range(0..=4)).collect();
        if group_dimension(group, &w).expect("dominant") <= BigUint::from(max_dim) {
            return Weight(w);
        }
    }
}

fn freudenthal_vs_weyl(
    rng: &mut ChaCha8Rng,
    cap: SizeCap,
    invariance: &mut PropertyCheck,
) -> Result<PropertyCheck> {
    let mut check =
        PropertyCheck::new("Freudenthal total = Weyl dimension (50 random weights, dim <= 5000)");
    for _ in 0..50 {
        let group = Group::simple(ty(FREUDENTHAL_TYPES.choose(rng).expect("nonempty")));
        let w = random_dominant(rng, &group, 5000);
        let ch = group_irreducible_character(&group, w.coords(), cap)?;
        let dim = group_dimension(&group, w.coords())?;
        check.check(ch.dimension() == dim, || {
            format!("{group} {w}: {} vs {dim}", ch.dimension())
        });
        invariance.check(ch.is_weyl_invariant(), || format!("{group} {w}"));
    }
    Ok(check)
}

/// Irreducible of dimension ≤ 30, sometimes plus a second one.
fn random_small_character(rng: &mut ChaCha8Rng, cap: SizeCap) -> Result<Character> {
    let group = Group::simple(ty(FREUDENTHAL_TYPES.choose(rng).expect("nonempty")));
    let pool = small_irreducibles(&group, 30);
    let first = pool
        .choose(rng)
        .expect("every type has a small irreducible");
    let mut ch = group_irreducible_character(&group, first.coords(), cap)?;
    if rng.gen_bool(0.5) {
        let room = 30 - u64::try_from(ch.dimension()).expect("small");
        let fits: Vec<&Weight> = pool
            .iter()
            .filter(|w| {
                group_dimension(&group, w.coords()).expect("dominant") <= BigUint::from(room)
            })
            .collect();
        if let Some(second) = fits.choose(rng) {
            ch = ch.add(&group_irreducible_character(&group, second.coords(), cap)?)?;
        }
    }
    Ok(ch)
}

fn newton_identities(
    rng: &mut ChaCha8Rng,
    cap: SizeCap,
    invariance: &mut PropertyCheck,
) -> Result<PropertyCheck> {
    let mut check = PropertyCheck::new(
        "tensor^3 = Sym^3 + Ext^3 + 2 S_(2,1); Sym^2 +- Ext^2 (20 random characters)",
    );
    for _ in 0..20 {
        let a = random_small_character(rng, cap)?;
        let label = || format!("{} of dim {}", a.group(), a.dimension());
        let cube = a.tensor_power(3, cap)?;
        let hook = a.hook21(cap)?;
        let sum = a
            .sym_power(3, cap)?
            .add(&a.ext_power(3, cap)?)?
            .add(&hook)?
            .add(&hook)?;
        check.check(cube == sum, label);
        let s2 = a.sym_power(2, cap)?;
        let e2 = a.ext_power(2, cap)?;
        check.check(s2.add(&e2)? == a.tensor(&a, cap)?, label);
        check.check(e2.add(&a.adams(2))? == s2, label);
        for ch in [&cube, &hook, &s2, &e2] {
            invariance.check(ch.is_weyl_invariant(), label);
        }
    }
    Ok(check)
}

fn gaussian_checks() -> Result<(PropertyCheck, PropertyCheck)> {
    let mut palindrome =
        PropertyCheck::new("Gaussian polynomials symmetric and palindromic (a <= 24)");
    for a in 0..=24usize {
        for b in 0..=a {
            let g = gaussian_polynomial(a, b)?;
            palindrome.check(
                g.is_palindromic() && g == gaussian_polynomial(a, a - b)?,
                || format!("[{a} choose {b}]"),
            );
        }
    }
    let mut genfn =
        PropertyCheck::new("p(k,j,n) = coefficient of q^n in [j+k choose k] (k, j <= 12)");
    for k in 0..=12usize {
        for j in 0..=12usize {
            let g = gaussian_polynomial(j + k, k)?;
            for n in 0..=k * j + 1 {
                let p = BigInt::from(count_bounded_partitions(k, j, n));
                genfn.check(p == g.coeff(n), || format!("k={k} j={j} n={n}"));
            }
        }
    }
    Ok((palindrome, genfn))
}

fn schur_orthogonality(cap: SizeCap) -> Result<PropertyCheck> {
    let mut check =
        PropertyCheck::new("trivial multiplicity of a (x) dual(a) = 1 (irreducibles, dim <= 30)");
    for t in CartanType::all_supported() {
        let group = Group::simple(t);
        for w in small_irreducibles(&group, 30) {
            let a = group_irreducible_character(&group, w.coords(), cap)?;
            let m = a.tensor(&a.dual(), cap)?.trivial_multiplicity()?;
            check.check(m.is_one(), || format!("{t} {w}: {m}"));
        }
    }
    Ok(check)
}

/// Runs every property with a fixed seed. The same seed gives the same
/// report.
pub fn verify_properties(seed: u64, cap: SizeCap) -> Result<PropertyReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut invariance = PropertyCheck::new("generated characters are Weyl-invariant");
    let freudenthal = freudenthal_vs_weyl(&mut rng, cap, &mut invariance)?;
    let newton = newton_identities(&mut rng, cap, &mut invariance)?;
    let (palindrome, genfn) = gaussian_checks()?;
    let orthogonality = schur_orthogonality(cap)?;
    let checks = vec![
        freudenthal,
        newton,
        invariance,
        palindrome,
        genfn,
        orthogonality,
    ];
    Ok(PropertyReport { seed, checks })
}
