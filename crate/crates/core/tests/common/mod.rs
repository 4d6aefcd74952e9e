//! Independent oracles and generators shared by the integration tests.
//!
//! Nothing here calls into the arithmetic or separation code it is used to
//! check; conversions only go through the public constructors.

#![allow(dead_code)]

use std::cmp::Ordering;
use std::collections::BTreeSet;

use ckindex::engine::{NormTag, PointSet, Rational, Vector};
use ckindex::Ordinal;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::Rng;

// ---------------------------------------------------------------------------
// Ordinals below ω^ω as coefficient vectors indexed by (natural) exponent.

/// `coeffs[e]` is the coefficient of `ω^e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly(pub Vec<u64>);

impl Poly {
    pub fn triple(a: u64, b: u64, c: u64) -> Poly {
        Poly(vec![c, b, a]).trim()
    }

    fn trim(mut self) -> Poly {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
        self
    }

    fn coeff(&self, e: usize) -> u64 {
        self.0.get(e).copied().unwrap_or(0)
    }

    fn top(&self) -> Option<usize> {
        self.0.iter().rposition(|&c| c != 0)
    }

    pub fn cmp(&self, other: &Poly) -> Ordering {
        let n = self.0.len().max(other.0.len());
        for e in (0..n).rev() {
            match self.coeff(e).cmp(&other.coeff(e)) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }

    /// Order sum: everything of `self` below the top exponent of `rhs`
    /// disappears, the top coefficients add, the rest of `rhs` is copied.
    pub fn add(&self, rhs: &Poly) -> Poly {
        let Some(t) = rhs.top() else {
            return self.clone();
        };
        let n = self.0.len().max(rhs.0.len());
        let mut out = vec![0; n];
        for (e, slot) in out.iter_mut().enumerate() {
            *slot = match e.cmp(&t) {
                Ordering::Greater => self.coeff(e),
                Ordering::Equal => self.coeff(e) + rhs.coeff(e),
                Ordering::Less => rhs.coeff(e),
            };
        }
        Poly(out).trim()
    }

    fn monomial(e: usize) -> Poly {
        let mut v = vec![0; e + 1];
        v[e] = 1;
        Poly(v)
    }

    /// `self · ω^e` for `e >= 1`: the supremum of `self · ω^(e-1) · n`,
    /// which is `ω^(top + e)` whenever `self > 0`.
    fn times_omega_power(&self, e: usize) -> Poly {
        match self.top() {
            None => Poly(vec![]),
            Some(t) => Poly::monomial(t + e),
        }
    }

    /// Product by repeated addition over the normal form of `rhs`.
    pub fn mul(&self, rhs: &Poly) -> Poly {
        let mut acc = Poly(vec![]);
        for e in (0..rhs.0.len()).rev() {
            let block = if e == 0 {
                self.clone()
            } else {
                self.times_omega_power(e)
            };
            for _ in 0..rhs.coeff(e) {
                acc = acc.add(&block);
            }
        }
        acc
    }

    pub fn to_ordinal(&self) -> Ordinal {
        let terms: Vec<(Ordinal, u64)> = (0..self.0.len())
            .rev()
            .filter(|&e| self.0[e] != 0)
            .map(|e| (Ordinal::from(e as u64), self.0[e]))
            .collect();
        Ordinal::from_terms(terms).unwrap()
    }
}

/// All triples `(a, b, c)` with entries `<= max`, i.e. `ω²a + ωb + c`.
pub fn triples(max: u64) -> Vec<(u64, u64, u64)> {
    let mut v = Vec::new();
    for a in 0..=max {
        for b in 0..=max {
            for c in 0..=max {
                v.push((a, b, c));
            }
        }
    }
    v
}

pub fn triple_ordinal((a, b, c): (u64, u64, u64)) -> Ordinal {
    Poly::triple(a, b, c).to_ordinal()
}

// ---------------------------------------------------------------------------
// Ordinal generators.

fn canonical(mut terms: Vec<(Ordinal, u64)>) -> Ordinal {
    terms.sort_by(|x, y| y.0.cmp(&x.0));
    terms.dedup_by(|x, y| x.0 == y.0);
    Ordinal::from_terms(terms).unwrap()
}

/// Canonical ordinals of term depth `<= depth`, coefficients `<= max_coeff`.
pub fn arb_ordinal(depth: u32, max_coeff: u64) -> BoxedStrategy<Ordinal> {
    if depth == 0 {
        return (0..=max_coeff).prop_map(Ordinal::from).boxed();
    }
    prop::collection::vec((arb_ordinal(depth - 1, max_coeff), 1..=max_coeff), 0..4)
        .prop_map(canonical)
        .boxed()
}

pub fn random_ordinal<R: Rng>(rng: &mut R, depth: u32, max_coeff: u64) -> Ordinal {
    if depth == 0 {
        return Ordinal::from(rng.gen_range(0..=max_coeff));
    }
    let n = rng.gen_range(0..4);
    let terms = (0..n)
        .map(|_| {
            (
                random_ordinal(rng, depth - 1, max_coeff),
                rng.gen_range(1..=max_coeff),
            )
        })
        .collect();
    canonical(terms)
}

/// A random ordinal `>= ω` whose leading exponent is drawn by `lead`.
pub fn random_infinite_with<R: Rng>(rng: &mut R, lead: impl Fn(&mut R) -> Ordinal) -> Ordinal {
    loop {
        let e = lead(rng);
        if e.is_zero() {
            continue;
        }
        let head = Ordinal::from_terms([(e.clone(), rng.gen_range(1..=5))]).unwrap();
        let tail = random_ordinal(rng, 2, 5);
        let tail = if tail.degree().map_or(true, |d| *d < e) {
            tail
        } else {
            Ordinal::zero()
        };
        return head.try_add(&tail).unwrap();
    }
}

// ---------------------------------------------------------------------------
// Exact linear algebra helpers.

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Solves `m x = rhs` (rows of `m`). Returns the unique solution, or `None`
/// when the columns are dependent or the system is inconsistent.
fn solve_unique(mut m: Vec<Vec<Rational>>, mut rhs: Vec<Rational>) -> Option<Vec<Rational>> {
    let rows = m.len();
    let cols = m[0].len();
    let mut pivot_row = 0;
    let mut pivots = Vec::new();
    for c in 0..cols {
        let r = (pivot_row..rows).find(|&r| !m[r][c].is_zero())?;
        m.swap(pivot_row, r);
        rhs.swap(pivot_row, r);
        let p = m[pivot_row][c].clone();
        for v in m[pivot_row].iter_mut() {
            *v /= &p;
        }
        rhs[pivot_row] /= &p;
        for r2 in 0..rows {
            if r2 != pivot_row && !m[r2][c].is_zero() {
                let f = m[r2][c].clone();
                let row = m[pivot_row].clone();
                for (v, pv) in m[r2].iter_mut().zip(&row) {
                    *v -= &f * pv;
                }
                let rb = rhs[pivot_row].clone();
                rhs[r2] -= &f * &rb;
            }
        }
        pivots.push(c);
        pivot_row += 1;
    }
    if rhs[pivot_row..].iter().any(|v| !v.is_zero()) {
        return None;
    }
    Some(rhs[..cols].to_vec())
}

/// One nonzero vector spanning the null space of `m` (assumed to have
/// nullity exactly one), or `None` otherwise.
fn null_vector(m: &[Vec<Rational>]) -> Option<Vec<Rational>> {
    let cols = m[0].len();
    let mut a = m.to_vec();
    let rows = a.len();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let pv = a[r][c].clone();
        for v in a[r].iter_mut() {
            *v /= &pv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                let row = a[r].clone();
                for (v, x) in a[i].iter_mut().zip(&row) {
                    *v -= &f * x;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivot_cols.contains(c)).collect();
    if free.len() != 1 {
        return None;
    }
    let f = free[0];
    let mut x = vec![Rational::zero(); cols];
    x[f] = Rational::one();
    for (i, &c) in pivot_cols.iter().enumerate() {
        x[c] = -a[i][f].clone();
    }
    Some(x)
}

// ---------------------------------------------------------------------------
// Hull intersection by Carathéodory supports.

fn subsets_up_to(n: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 1u32..(1 << n) {
        if (mask.count_ones() as usize) <= max {
            out.push((0..n).filter(|i| mask & (1 << i) != 0).collect());
        }
    }
    out
}

/// `conv(S) ∩ conv(T) ≠ ∅`, decided by searching for a vertex of the
/// polytope of convex-combination weights: some support of at most
/// `dim + 2` linearly independent columns with a strictly positive solution.
pub fn hulls_intersect_oracle(s: &[Vector], t: &[Vector]) -> bool {
    if s.is_empty() || t.is_empty() {
        return false;
    }
    let dim = s[0].dim();
    let budget = dim + 2;
    let s_subs = subsets_up_to(s.len(), budget - 1);
    let t_subs = subsets_up_to(t.len(), budget - 1);
    for ss in &s_subs {
        for ts in &t_subs {
            if ss.len() + ts.len() > budget {
                continue;
            }
            let n = ss.len() + ts.len();
            let mut m = vec![vec![Rational::zero(); n]; dim + 2];
            for (j, &i) in ss.iter().enumerate() {
                m[0][j] = Rational::one();
                for k in 0..dim {
                    m[2 + k][j] = s[i].0[k].clone();
                }
            }
            for (jj, &i) in ts.iter().enumerate() {
                let j = ss.len() + jj;
                m[1][j] = Rational::one();
                for k in 0..dim {
                    m[2 + k][j] = -t[i].0[k].clone();
                }
            }
            let mut rhs = vec![Rational::zero(); dim + 2];
            rhs[0] = Rational::one();
            rhs[1] = Rational::one();
            if let Some(x) = solve_unique(m, rhs) {
                if x.iter().all(Signed::is_positive) {
                    return true;
                }
            }
        }
    }
    false
}

// ---------------------------------------------------------------------------
// Slice families by hyperplane dichotomies.

/// Coordinates of `pts` in an orthogonal (unnormalized) basis of their
/// affine hull, based at `pts[0]`.
fn affine_coordinates(pts: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let base = &pts[0];
    let mut basis: Vec<Vec<Rational>> = Vec::new();
    for p in &pts[1..] {
        let mut v = sub(p, base);
        for u in &basis {
            let f = dot(&v, u) / dot(u, u);
            v = v.iter().zip(u).map(|(a, b)| a - &f * b).collect();
        }
        if v.iter().any(|c| !c.is_zero()) {
            basis.push(v);
        }
    }
    pts.iter()
        .map(|p| {
            let d = sub(p, base);
            basis.iter().map(|u| dot(&d, u) / dot(u, u)).collect()
        })
        .collect()
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Every set `K ∩ {f > t}` (including ∅ and K), as sorted label lists.
///
/// Each full cell of the arrangement of lifted points has an extreme ray
/// normal to the hyperplane through `k` affinely independent points (`k` the
/// affine dimension). The cell's sign is fixed off that hyperplane and is a
/// dichotomy of the on-hyperplane points, found recursively.
pub fn slice_family(labels: &[usize], pts: &[Vec<Rational>]) -> BTreeSet<Vec<usize>> {
    let mut out = BTreeSet::new();
    out.insert(Vec::new());
    let mut all = labels.to_vec();
    all.sort();
    out.insert(all);
    if pts.len() <= 1 {
        return out;
    }
    let coords = affine_coordinates(pts);
    let k = coords[0].len();
    if k == 0 {
        return out;
    }
    let lifted: Vec<Vec<Rational>> = coords
        .iter()
        .map(|c| {
            let mut v = c.clone();
            v.push(Rational::one());
            v
        })
        .collect();
    for comb in combinations(pts.len(), k) {
        let m: Vec<Vec<Rational>> = comb.iter().map(|&i| lifted[i].clone()).collect();
        let Some(w) = null_vector(&m) else {
            continue;
        };
        let values: Vec<Rational> = lifted.iter().map(|l| dot(&w, l)).collect();
        let on: Vec<usize> = (0..pts.len()).filter(|&i| values[i].is_zero()).collect();
        let on_labels: Vec<usize> = on.iter().map(|&i| labels[i]).collect();
        let on_pts: Vec<Vec<Rational>> = on.iter().map(|&i| pts[i].clone()).collect();
        let sub_family = slice_family(&on_labels, &on_pts);
        for sign in [1, -1] {
            let above: Vec<usize> = (0..pts.len())
                .filter(|&i| {
                    if sign > 0 {
                        values[i].is_positive()
                    } else {
                        values[i].is_negative()
                    }
                })
                .map(|i| labels[i])
                .collect();
            for z in &sub_family {
                let mut s: Vec<usize> = above.iter().chain(z).copied().collect();
                s.sort();
                out.insert(s);
            }
        }
    }
    out
}

pub fn point_slices(set: &PointSet) -> BTreeSet<Vec<usize>> {
    let labels: Vec<usize> = (0..set.len()).collect();
    let pts: Vec<Vec<Rational>> = set.points().iter().map(|p| p.0.clone()).collect();
    slice_family(&labels, &pts)
}

/// Distance in the units the engine uses (squared under L2).
pub fn oracle_dist(a: &Vector, b: &Vector, norm: NormTag) -> Rational {
    let d = a.0.iter().zip(&b.0).map(|(x, y)| (x - y).abs());
    match norm {
        NormTag::L1 => d.fold(Rational::zero(), |acc, v| acc + v),
        NormTag::L2 => d.fold(Rational::zero(), |acc, v| acc + &v * &v),
        NormTag::Linf => d.fold(Rational::zero(), |acc, v| if v > acc { v } else { acc }),
    }
}

fn small(set: &PointSet, s: &[usize], eps: &Rational) -> bool {
    let bound = match set.norm() {
        NormTag::L2 => eps * eps,
        _ => eps.clone(),
    };
    s.iter().all(|&i| {
        s.iter()
            .all(|&j| oracle_dist(set.point(i), set.point(j), set.norm()) < bound)
    })
}

/// Removability decided over the full dichotomy family.
pub fn removable_by_dichotomies(
    set: &PointSet,
    family: &BTreeSet<Vec<usize>>,
    x: usize,
    eps: &Rational,
) -> bool {
    family.iter().any(|s| s.contains(&x) && small(set, s, eps))
}

/// Removability by enumerating every subset containing `x` (no
/// neighbourhood restriction), separability by Carathéodory supports.
pub fn removable_by_subsets(set: &PointSet, x: usize, eps: &Rational) -> bool {
    let others: Vec<usize> = (0..set.len()).filter(|&i| i != x).collect();
    for mask in 0u32..(1 << others.len()) {
        let mut s = vec![x];
        s.extend(
            (0..others.len())
                .filter(|b| mask & (1 << b) != 0)
                .map(|b| others[b]),
        );
        if !small(set, &s, eps) {
            continue;
        }
        let inside: Vec<Vector> = s.iter().map(|&i| set.point(i).clone()).collect();
        let outside: Vec<Vector> = (0..set.len())
            .filter(|i| !s.contains(i))
            .map(|i| set.point(i).clone())
            .collect();
        if !hulls_intersect_oracle(&inside, &outside) {
            return true;
        }
    }
    false
}

/// Full iterated derivation where each stage is computed by `removable_at`.
pub fn ranks_by<F>(set: &PointSet, eps: &Rational, removable_at: F) -> Vec<usize>
where
    F: Fn(&PointSet, usize, &Rational) -> bool,
{
    let mut current: Vec<usize> = (0..set.len()).collect();
    let mut ranks = vec![0; set.len()];
    let mut stage = 0;
    while !current.is_empty() {
        let sub = set.subset(&current);
        let next: Vec<usize> = (0..current.len())
            .filter(|&i| !removable_at(&sub, i, eps))
            .map(|i| current[i])
            .collect();
        assert!(
            next.len() < current.len(),
            "finite sets always lose a vertex"
        );
        stage += 1;
        for &i in &next {
            ranks[i] = stage;
        }
        current = next;
    }
    ranks
}

/// Ranks under the dichotomy oracle (the last stage each point belongs to).
pub fn oracle_ranks(set: &PointSet, eps: &Rational) -> Vec<usize> {
    ranks_by(set, eps, |sub, x, e| {
        let family = point_slices(sub);
        removable_by_dichotomies(sub, &family, x, e)
    })
}

/// ε-k-obstacle by enumerating every slice of every stage `β < k`.
pub fn obstacle_by_enumeration(
    set: &PointSet,
    obstacle: &[usize],
    f: usize,
    eps: &Rational,
    k: usize,
) -> bool {
    if obstacle.is_empty() {
        return false;
    }
    let bound = match set.norm() {
        NormTag::L2 => eps * eps,
        _ => eps.clone(),
    };
    if obstacle
        .iter()
        .any(|&m| oracle_dist(set.point(f), set.point(m), set.norm()) < bound)
    {
        return false;
    }
    let ranks = oracle_ranks(set, eps);
    for beta in 0..k {
        let stage: Vec<usize> = (0..set.len()).filter(|&i| ranks[i] >= beta).collect();
        if !stage.contains(&f) {
            continue;
        }
        let pts: Vec<Vec<Rational>> = stage.iter().map(|&i| set.point(i).0.clone()).collect();
        for slice in slice_family(&stage, &pts) {
            if slice.contains(&f) && !slice.iter().any(|i| obstacle.contains(i)) {
                return false;
            }
        }
    }
    true
}

// ---------------------------------------------------------------------------
// Point set generators.

/// Small rational coordinates: integers in [-3, 3] and a few halves.
fn coord_strategy() -> impl Strategy<Value = Rational> {
    (-6i64..=6).prop_map(|n| q(n, 2))
}

pub fn norm_strategy() -> impl Strategy<Value = NormTag> {
    prop_oneof![Just(NormTag::L1), Just(NormTag::L2), Just(NormTag::Linf)]
}

pub fn eps_strategy() -> impl Strategy<Value = Rational> {
    (1i64..=8).prop_map(|n| q(n, 2))
}

pub fn arb_point_set(max_points: usize, max_dim: usize) -> impl Strategy<Value = PointSet> {
    (1..=max_dim, norm_strategy()).prop_flat_map(move |(dim, norm)| {
        prop::collection::vec(prop::collection::vec(coord_strategy(), dim), 1..=max_points)
            .prop_map(move |raw| {
                let mut pts: Vec<Vector> = Vec::new();
                for r in raw {
                    let v = Vector(r);
                    if !pts.contains(&v) {
                        pts.push(v);
                    }
                }
                PointSet::new(dim, norm, pts).unwrap()
            })
    })
}

pub fn random_point_set<R: Rng>(
    rng: &mut R,
    max_points: usize,
    max_dim: usize,
    norm: NormTag,
) -> PointSet {
    let dim = rng.gen_range(1..=max_dim);
    let n = rng.gen_range(1..=max_points);
    let mut pts: Vec<Vector> = Vec::new();
    while pts.len() < n {
        let v = Vector((0..dim).map(|_| q(rng.gen_range(-6..=6), 2)).collect());
        if !pts.contains(&v) {
            pts.push(v);
        }
    }
    PointSet::new(dim, norm, pts).unwrap()
}

pub fn random_eps<R: Rng>(rng: &mut R) -> Rational {
    q(rng.gen_range(1..=8), 2)
}

/// Applies `y_k = sign_k · x_perm(k) + offset_k`, an isometry for all three norms.
pub fn signed_permutation(
    set: &PointSet,
    perm: &[usize],
    signs: &[bool],
    offset: &[Rational],
) -> PointSet {
    let points = set
        .points()
        .iter()
        .map(|p| {
            Vector(
                (0..set.dim())
                    .map(|k| {
                        let c = &p.0[perm[k]];
                        let c = if signs[k] { c.clone() } else { -c.clone() };
                        c + &offset[k]
                    })
                    .collect(),
            )
        })
        .collect();
    PointSet::new(set.dim(), set.norm(), points).unwrap()
}

pub fn random_isometry<R: Rng>(rng: &mut R, dim: usize) -> (Vec<usize>, Vec<bool>, Vec<Rational>) {
    use rand::seq::SliceRandom;
    let mut perm: Vec<usize> = (0..dim).collect();
    perm.shuffle(rng);
    let signs = (0..dim).map(|_| rng.gen_bool(0.5)).collect();
    let offset = (0..dim).map(|_| q(rng.gen_range(-4..=4), 3)).collect();
    (perm, signs, offset)
}

// ---------------------------------------------------------------------------
// CLI harness.

pub fn run_cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("ckindex").chain(args.iter().copied());
    let code = ckindex::cli::run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

/// The typed structured-output shape of a subcommand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    Ordinal,
    Compare,
    Bool,
    Derived,
    Report,
    Derive,
    Tree,
    Shift,
    Obstacle,
}

fn reserialize<T: serde::de::DeserializeOwned + serde::Serialize>(
    text: &str,
) -> Result<String, String> {
    let value: T = serde_json::from_str(text).map_err(|e| e.to_string())?;
    serde_json::to_string(&value).map_err(|e| e.to_string())
}

/// Parses `text` (one JSON line) as `shape` and formats it again; the result
/// must reproduce the input byte for byte.
pub fn round_trip(shape: Shape, text: &str) -> Result<(), String> {
    use ckindex::cli::*;
    let line = text.strip_suffix('\n').ok_or("missing trailing newline")?;
    let again = match shape {
        Shape::Ordinal => reserialize::<OrdinalOutput>(line)?,
        Shape::Compare => reserialize::<CompareOutput>(line)?,
        Shape::Bool => reserialize::<BoolOutput>(line)?,
        Shape::Derived => reserialize::<DerivedOutput>(line)?,
        Shape::Report => reserialize::<ReportOutput>(line)?,
        Shape::Derive => reserialize::<DeriveOutput>(line)?,
        Shape::Tree => reserialize::<TreeOutput>(line)?,
        Shape::Shift => reserialize::<ShiftOutput>(line)?,
        Shape::Obstacle => reserialize::<ObstacleOutput>(line)?,
    };
    if again == line {
        Ok(())
    } else {
        Err(format!("re-serialized form differs:\n{line}\n{again}"))
    }
}

/// One invocation of every documented subcommand, with input files written
/// under `dir`.
pub fn documented_invocations(dir: &std::path::Path) -> Vec<(Vec<String>, Shape)> {
    let line = dir.join("line.json");
    std::fs::write(
        &line,
        r#"{"dim":1,"norm":"l1","points":[["-1"],["0"],["1"]]}"#,
    )
    .unwrap();
    let seq = dir.join("seq.json");
    std::fs::write(
        &seq,
        r#"{"dim":4,"norm":"l1","points":[["1","0","0","0"],["0","1","0","1/2"]]}"#,
    )
    .unwrap();
    let (line, seq) = (
        line.to_str().unwrap().to_string(),
        seq.to_str().unwrap().to_string(),
    );
    let cases: Vec<(Vec<&str>, Shape)> = vec![
        (vec!["ord", "eval", "w + 1 + w"], Shape::Ordinal),
        (vec!["ord", "add", "1", "w"], Shape::Ordinal),
        (vec!["ord", "mul", "w + 1", "w"], Shape::Ordinal),
        (vec!["ord", "cmp", "w^2", "w*5"], Shape::Compare),
        (vec!["ord", "pow-omega", "w*3 + 2"], Shape::Ordinal),
        (vec!["ord", "omega-pow", "w"], Shape::Ordinal),
        (vec!["cb", "derive", "w^2 + 1"], Shape::Derived),
        (vec!["cb", "power", "w^2*3", "2"], Shape::Derived),
        (vec!["cb", "height", "w^w"], Shape::Ordinal),
        (vec!["index", "sz", "w^(w^w)"], Shape::Ordinal),
        (vec!["index", "dz", "w^(w^2)"], Shape::Ordinal),
        (vec!["index", "dz-height", "w + 1"], Shape::Ordinal),
        (vec!["index", "sz-l2", "w^(w^3)"], Shape::Ordinal),
        (vec!["index", "iso-class", "w^5*3 + w"], Shape::Ordinal),
        (vec!["index", "iso-equiv", "w", "w*2"], Shape::Bool),
        (vec!["index", "report", "w"], Shape::Report),
        (
            vec!["index", "report", "w + 1", "--family", "height"],
            Shape::Report,
        ),
        (
            vec!["index", "report", "w^(w^w)", "--family", "l2"],
            Shape::Report,
        ),
        (
            vec!["lab", "derive", "--input", &line, "--eps", "1/2"],
            Shape::Derive,
        ),
        (
            vec![
                "lab", "derive", "--input", &line, "--eps", "3", "--norm", "l2",
            ],
            Shape::Derive,
        ),
        (
            vec!["lab", "tree", "--depth", "2", "--eps", "1"],
            Shape::Tree,
        ),
        (
            vec!["lab", "shift", "--input", &seq, "--by", "1"],
            Shape::Shift,
        ),
        (
            vec![
                "lab",
                "obstacle",
                "--input",
                &line,
                "--obstacle-indices",
                "0,2",
                "--point",
                "1",
                "--eps",
                "1",
                "--stages",
                "1",
            ],
            Shape::Obstacle,
        ),
    ];
    cases
        .into_iter()
        .map(|(args, shape)| {
            let mut v: Vec<String> = args.into_iter().map(String::from).collect();
            v.push("--format".into());
            v.push("json".into());
            (v, shape)
        })
        .collect()
}

#[cfg(test)]
mod self_checks {
    use super::*;

    #[test]
    fn poly_oracle_basics() {
        let w = Poly::triple(0, 1, 0);
        let one = Poly::triple(0, 0, 1);
        assert_eq!(one.add(&w), w);
        assert_eq!(w.mul(&w), Poly::triple(1, 0, 0));
        assert_eq!(Poly::triple(0, 2, 0).mul(&w), Poly::triple(1, 0, 0));
        assert_eq!(
            Poly::triple(0, 1, 1).mul(&Poly::triple(0, 0, 2)),
            Poly::triple(0, 2, 1)
        );
    }

    #[test]
    fn dichotomies_of_a_square() {
        let pts: Vec<Vec<Rational>> = [[0, 0], [1, 0], [1, 1], [0, 1]]
            .iter()
            .map(|p| p.iter().map(|&c| q(c, 1)).collect())
            .collect();
        let fam = slice_family(&[0, 1, 2, 3], &pts);
        // ∅, 4 singletons, 4 adjacent pairs, 4 triples, the whole square
        assert_eq!(fam.len(), 14);
        assert!(!fam.contains(&vec![0, 2]));
    }

    #[test]
    fn dichotomies_of_collinear_points() {
        let pts: Vec<Vec<Rational>> = (0..4).map(|i| vec![q(i, 1), q(2 * i, 1)]).collect();
        let fam = slice_family(&[0, 1, 2, 3], &pts);
        // prefixes and suffixes along the line
        assert_eq!(fam.len(), 8);
    }
}
