//! Module-theoretic checks on [`MatrixRep`]s, from spinning up to
//! submodule counts.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{Matrix, Subspace};
use crate::poly::Poly;
use crate::rep::MatrixRep;
use crate::twisted_group::{p_regular_class_orbits, TwistedGroup};

/// Bound on the number of vectors enumerated by exhaustive searches.
pub const EXHAUSTIVE_LIMIT: u64 = 1 << 20;
/// Bound on exhaustive search over an intertwiner solution space.
pub const INTERTWINER_EXHAUSTIVE: u64 = 4096;
const RANDOM_INTERTWINER_TRIES: usize = 64;
const MEATAXE_TRIES: usize = 64;
const SEED: u64 = 0x7a3e_5eed;

/// A vector together with the proper submodule it spins.
type Witness<F> = (Vec<<F as Field>::Elem>, Subspace<F>);

fn checked_size_pow(size: u64, k: usize) -> Option<u64> {
    size.checked_pow(k as u32)
}

/// Smallest subspace containing `v` and stable under `gens`.
pub fn spin_with<F: Field>(field: &F, v: &[F::Elem], gens: &[&Matrix<F>]) -> Subspace<F> {
    let mut w = Subspace::new(field, v.len());
    let mut queue = Vec::new();
    if let Some(row) = w.insert(v.to_vec()) {
        queue.push(row);
    }
    while let Some(x) = queue.pop() {
        if w.dim() == w.ambient() {
            break;
        }
        for g in gens {
            if let Some(row) = w.insert(g.mul_vec(&x)) {
                queue.push(row);
            }
        }
    }
    w
}

/// The cyclic submodule generated by `v`.
pub fn spin<F: Field>(v: &[F::Elem], rep: &MatrixRep<F>) -> Subspace<F> {
    spin_with(rep.field(), v, &rep.generators())
}

/// The action on an invariant subspace, in its echelon basis.
pub fn sub_rep<F: Field>(rep: &MatrixRep<F>, w: &Subspace<F>) -> Result<MatrixRep<F>> {
    let field = rep.field();
    let k = w.dim();
    let restrict = |g: &Matrix<F>| -> Result<Matrix<F>> {
        let mut out = Matrix::zero(field, k, k);
        for (j, b) in w.basis().iter().enumerate() {
            let img = g.mul_vec(b);
            if !w.contains(&img) {
                return Err(Error::IncompatibleParameters("subspace not invariant".into()));
            }
            for (i, c) in w.coordinates(&img).into_iter().enumerate() {
                out.set(i, j, c);
            }
        }
        Ok(out)
    };
    MatrixRep::new(rep.group(), restrict(rep.gen_t())?, restrict(rep.gen_s())?)
}

/// The action on `V / W`, in the basis of standard vectors at non-pivot
/// positions of `W`.
pub fn quotient_rep<F: Field>(rep: &MatrixRep<F>, w: &Subspace<F>) -> Result<MatrixRep<F>> {
    let field = rep.field();
    let n = rep.degree();
    let free: Vec<usize> = (0..n).filter(|c| !w.pivots().contains(c)).collect();
    let k = free.len();
    let act = |g: &Matrix<F>| -> Matrix<F> {
        let mut out = Matrix::zero(field, k, k);
        for (j, &c) in free.iter().enumerate() {
            let mut img: Vec<F::Elem> = (0..n).map(|r| g.get(r, c)).collect();
            w.reduce(&mut img);
            for (i, &fc) in free.iter().enumerate() {
                out.set(i, j, img[fc]);
            }
        }
        out
    };
    MatrixRep::new(rep.group(), act(rep.gen_t()), act(rep.gen_s()))
}

/// Annihilator in `V` of a subspace of the dual; invariant when the dual
/// subspace is invariant under the transposed action.
fn annihilator<F: Field>(field: &F, u: &Subspace<F>) -> Subspace<F> {
    let n = u.ambient();
    let m = Matrix::from_rows(field, u.basis().to_vec());
    Subspace::spanned_by(field, n, &m.nullspace())
}

/// Nonzero vectors of `span(basis)` whose first nonzero coordinate (with
/// respect to `basis`) is one.
fn normalized_combinations<'a, F: Field>(
    field: &'a F,
    basis: &'a [Vec<F::Elem>],
) -> impl Iterator<Item = Vec<F::Elem>> + 'a {
    let k = basis.len();
    let q = field.size();
    let n = basis.first().map_or(0, |b| b.len());
    (0..k).flat_map(move |lead| {
        let tail = k - lead - 1;
        let count = q.pow(tail as u32);
        (0..count).map(move |mut idx| {
            let mut v = basis[lead].clone();
            for b in basis.iter().skip(lead + 1) {
                let c = field.element(idx % q);
                idx /= q;
                if !field.is_zero(c) {
                    for (x, &y) in v.iter_mut().zip(b) {
                        *x = field.add(*x, field.mul(c, y));
                    }
                }
            }
            debug_assert_eq!(v.len(), n);
            v
        })
    })
}

fn random_elem<F: Field>(field: &F, rng: &mut ChaCha8Rng) -> F::Elem {
    field.element(rng.gen_range(0..field.size()))
}

/// A pseudo-random element of the matrix algebra spanned by the group
/// image, built from products of the generators.
struct AlgebraSampler<F: Field> {
    field: F,
    words: Vec<Matrix<F>>,
    rng: ChaCha8Rng,
}

impl<F: Field> AlgebraSampler<F> {
    fn new(rep: &MatrixRep<F>, seed: u64) -> Self {
        AlgebraSampler {
            field: rep.field().clone(),
            words: vec![rep.gen_t().clone(), rep.gen_s().clone()],
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    fn next(&mut self) -> Matrix<F> {
        let i = self.rng.gen_range(0..self.words.len());
        let j = self.rng.gen_range(0..self.words.len());
        let w = self.words[i].mul(&self.words[j]);
        if self.words.len() < 12 {
            self.words.push(w);
        } else {
            let k = self.rng.gen_range(2..self.words.len());
            self.words[k] = w;
        }
        let n = self.words[0].rows();
        let mut a = Matrix::zero(&self.field, n, n);
        for w in &self.words {
            let c = random_elem(&self.field, &mut self.rng);
            a = a.add(&w.scale(c));
        }
        a
    }
}

fn irreducible_factors<F: Field>(a: &Matrix<F>, rng: &mut ChaCha8Rng) -> Vec<Poly<F>> {
    let mut fs: Vec<Poly<F>> = a.charpoly().factor(rng).into_iter().map(|(g, _)| g).collect();
    fs.sort_by_key(|g| g.sort_key());
    fs
}

/// One round of the Holt–Rees test with the algebra element `a`.
/// `Ok(Some(w))` is a proper submodule, `Ok(None)` proves irreducibility,
/// `Err(())` is inconclusive.
fn holt_rees_round<F: Field>(
    rep: &MatrixRep<F>,
    a: &Matrix<F>,
    rng: &mut ChaCha8Rng,
) -> std::result::Result<Option<Subspace<F>>, ()> {
    let field = rep.field();
    let n = rep.degree();
    let gens = rep.generators();
    let gens_t: Vec<Matrix<F>> = gens.iter().map(|g| g.transpose()).collect();
    let gens_t_ref: Vec<&Matrix<F>> = gens_t.iter().collect();
    for g in irreducible_factors(a, rng) {
        let ga = a.eval_poly(&g);
        let ker = ga.nullspace();
        let v = &ker[0];
        let w = spin_with(field, v, &gens);
        if w.dim() < n {
            return Ok(Some(w));
        }
        if ker.len() == g.deg() {
            let kt = ga.transpose().nullspace();
            let u = spin_with(field, &kt[0], &gens_t_ref);
            if u.dim() < n {
                return Ok(Some(annihilator(field, &u)));
            }
            return Ok(None);
        }
    }
    Err(())
}

/// Finds a proper nonzero submodule, or proves there is none.
pub fn find_submodule<F: Field>(rep: &MatrixRep<F>) -> Result<Option<Subspace<F>>> {
    let n = rep.degree();
    if n <= 1 {
        return Ok(None);
    }
    let mut sampler = AlgebraSampler::new(rep, SEED);
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 1);
    for _ in 0..MEATAXE_TRIES {
        let a = sampler.next();
        if let Ok(res) = holt_rees_round(rep, &a, &mut rng) {
            return Ok(res);
        }
    }
    Ok(exhaustive_submodule(rep, EXHAUSTIVE_LIMIT)?.map(|(_, w)| w))
}

/// `ker g(A)` as a direct sum of lines over `F[A]/(g)`: block `j` has
/// leading vector `b_j` and the `F`-basis `A^i b_k`, `k > j`, of the later
/// lines.
struct KernelBlock<E> {
    lead: Vec<E>,
    tail: Vec<Vec<E>>,
}

fn kernel_blocks<F: Field>(field: &F, a: &Matrix<F>, ker: &[Vec<F::Elem>], deg: usize) -> Vec<KernelBlock<F::Elem>> {
    let mut span = Subspace::new(field, a.rows());
    let mut lines: Vec<Vec<Vec<F::Elem>>> = Vec::new();
    for v in ker {
        if span.contains(v) {
            continue;
        }
        let mut powers = vec![v.clone()];
        for _ in 1..deg {
            let next = a.mul_vec(powers.last().expect("nonempty"));
            powers.push(next);
        }
        for x in &powers {
            span.insert(x.clone());
        }
        lines.push(powers);
    }
    (0..lines.len())
        .map(|j| KernelBlock {
            lead: lines[j][0].clone(),
            tail: lines[j + 1..].iter().flatten().cloned().collect(),
        })
        .collect()
}

/// `lead + Σ c_i tail_i` over all coefficient choices.
fn affine_combinations<'a, F: Field>(
    field: &'a F,
    lead: &'a [F::Elem],
    tail: &'a [Vec<F::Elem>],
) -> impl Iterator<Item = Vec<F::Elem>> + 'a {
    let q = field.size();
    (0..q.pow(tail.len() as u32)).map(move |mut idx| {
        let mut v = lead.to_vec();
        for b in tail {
            let c = field.element(idx % q);
            idx /= q;
            if !field.is_zero(c) {
                for (x, &y) in v.iter_mut().zip(b) {
                    *x = field.add(*x, field.mul(c, y));
                }
            }
        }
        v
    })
}

/// Exact search. A minimal submodule `W` is stable under every `A` in the
/// algebra, so for an irreducible factor `g` of the characteristic
/// polynomial of `A|_W` it meets `ker g(A)` in a nonzero `F[A]/(g)`-space.
/// Spinning one vector from each `F[A]/(g)`-line of each kernel therefore
/// finds a proper submodule whenever one exists.
fn exhaustive_submodule<F: Field>(
    rep: &MatrixRep<F>,
    limit: u64,
) -> Result<Option<Witness<F>>> {
    let field = rep.field();
    let n = rep.degree();
    let q = field.size();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 2);
    let mut candidates = vec![rep.gen_t().add(rep.gen_s()), rep.gen_t().clone(), rep.gen_s().clone()];
    let mut sampler = AlgebraSampler::new(rep, SEED ^ 3);
    for _ in 0..6 {
        candidates.push(sampler.next());
    }
    let mut best: Option<(u64, Vec<KernelBlock<F::Elem>>)> = None;
    for a in &candidates {
        let blocks: Vec<KernelBlock<F::Elem>> = irreducible_factors(a, &mut rng)
            .iter()
            .flat_map(|g| kernel_blocks(field, a, &a.eval_poly(g).nullspace(), g.deg()))
            .collect();
        let cost = blocks
            .iter()
            .map(|b| checked_size_pow(q, b.tail.len()).unwrap_or(u64::MAX))
            .fold(0u64, |x, y| x.saturating_add(y));
        if best.as_ref().is_none_or(|(c, _)| cost < *c) {
            best = Some((cost, blocks));
        }
    }
    let (cost, blocks) = best.expect("candidates nonempty");
    if cost > limit {
        return Err(Error::Inconclusive(n));
    }
    let gens = rep.generators();
    for b in &blocks {
        for v in affine_combinations(field, &b.lead, &b.tail) {
            let w = spin_with(field, &v, &gens);
            if w.dim() < n {
                return Ok(Some((v, w)));
            }
        }
    }
    Ok(None)
}

fn check_exhaustive_bound<F: Field>(rep: &MatrixRep<F>) -> Result<()> {
    match checked_size_pow(rep.field().size(), rep.degree()) {
        Some(x) if x <= EXHAUSTIVE_LIMIT => Ok(()),
        _ => Err(Error::TooLarge(format!(
            "{}^{} vectors",
            rep.field().size(),
            rep.degree()
        ))),
    }
}

/// Exact irreducibility test; on failure returns a vector whose spin is a
/// proper submodule.
pub fn irreducibility_witness<F: Field>(rep: &MatrixRep<F>) -> Result<Option<Vec<F::Elem>>> {
    check_exhaustive_bound(rep)?;
    if rep.degree() <= 1 {
        return Ok(None);
    }
    Ok(exhaustive_submodule(rep, EXHAUSTIVE_LIMIT)?.map(|(v, _)| v))
}

pub fn is_irreducible<F: Field>(rep: &MatrixRep<F>) -> Result<bool> {
    Ok(irreducibility_witness(rep)?.is_none())
}

/// Solution space of `M·A_k = B_k·M` for all generator pairs, as matrices.
fn intertwiner_space<F: Field>(a: &[&Matrix<F>], b: &[&Matrix<F>]) -> Vec<Matrix<F>> {
    let field = a[0].field();
    let n = a[0].rows();
    let m = b[0].rows();
    let unknowns = m * n;
    let mut sys = Matrix::zero(field, a.len() * m * n, unknowns);
    for (g, (ag, bg)) in a.iter().zip(b).enumerate() {
        for i in 0..m {
            for j in 0..n {
                let row = g * m * n + i * n + j;
                // (M A)[i][j] = Σ_k M[i][k] A[k][j]
                for k in 0..n {
                    let x = ag.get(k, j);
                    if !field.is_zero(x) {
                        let c = i * n + k;
                        sys.set(row, c, field.add(sys.get(row, c), x));
                    }
                }
                // (B M)[i][j] = Σ_k B[i][k] M[k][j]
                for k in 0..m {
                    let x = bg.get(i, k);
                    if !field.is_zero(x) {
                        let c = k * n + j;
                        sys.set(row, c, field.sub(sys.get(row, c), x));
                    }
                }
            }
        }
    }
    sys.nullspace()
        .into_iter()
        .map(|v| {
            let rows = v.chunks(n).map(|r| r.to_vec()).collect();
            Matrix::from_rows(field, rows)
        })
        .collect()
}

/// Dimension over the coefficient field of `End_G(V)`.
pub fn endomorphism_dim<F: Field>(rep: &MatrixRep<F>) -> usize {
    let g = rep.generators();
    intertwiner_space(&g, &g).len()
}

fn same_setting<F: Field>(r1: &MatrixRep<F>, r2: &MatrixRep<F>) -> Result<()> {
    if r1.group() != r2.group() || !r1.field().same_as(r2.field()) {
        return Err(Error::FieldMismatch);
    }
    Ok(())
}

/// An invertible `M` with `M·rep1(g) = rep2(g)·M`, if one is found.
pub fn find_isomorphism<F: Field>(
    rep1: &MatrixRep<F>,
    rep2: &MatrixRep<F>,
) -> Result<Option<Matrix<F>>> {
    same_setting(rep1, rep2)?;
    let n = rep1.degree();
    if n != rep2.degree() {
        return Ok(None);
    }
    if n > 64 {
        return Err(Error::TooLarge(format!("isomorphism test in dimension {n}")));
    }
    if rep1.gen_t().charpoly() != rep2.gen_t().charpoly()
        || rep1.gen_s().charpoly() != rep2.gen_s().charpoly()
    {
        return Ok(None);
    }
    let basis = intertwiner_space(&rep1.generators(), &rep2.generators());
    let field = rep1.field();
    let k = basis.len();
    if k == 0 {
        return Ok(None);
    }
    let combine = |coeffs: &[F::Elem]| -> Matrix<F> {
        basis
            .iter()
            .zip(coeffs)
            .fold(Matrix::zero(field, n, n), |acc, (b, &c)| acc.add(&b.scale(c)))
    };
    if let Some(m) = basis.iter().find(|b| b.is_invertible()) {
        return Ok(Some(m.clone()));
    }
    let q = field.size();
    match checked_size_pow(q, k) {
        Some(total) if total <= INTERTWINER_EXHAUSTIVE => {
            for idx in 0..total {
                let mut x = idx;
                let coeffs: Vec<F::Elem> = (0..k)
                    .map(|_| {
                        let c = field.element(x % q);
                        x /= q;
                        c
                    })
                    .collect();
                let m = combine(&coeffs);
                if m.is_invertible() {
                    return Ok(Some(m));
                }
            }
            Ok(None)
        }
        _ => {
            let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 4);
            for _ in 0..RANDOM_INTERTWINER_TRIES {
                let coeffs: Vec<F::Elem> = (0..k).map(|_| random_elem(field, &mut rng)).collect();
                let m = combine(&coeffs);
                if m.is_invertible() {
                    return Ok(Some(m));
                }
            }
            Ok(None)
        }
    }
}

pub fn are_isomorphic<F: Field>(rep1: &MatrixRep<F>, rep2: &MatrixRep<F>) -> Result<bool> {
    Ok(find_isomorphism(rep1, rep2)?.is_some())
}

fn composition_factors<F: Field>(rep: &MatrixRep<F>, out: &mut Vec<MatrixRep<F>>) -> Result<()> {
    match find_submodule(rep)? {
        None => out.push(rep.clone()),
        Some(w) => {
            composition_factors(&sub_rep(rep, &w)?, out)?;
            composition_factors(&quotient_rep(rep, &w)?, out)?;
        }
    }
    Ok(())
}

fn matrix_key<F: Field>(rep: &MatrixRep<F>) -> Vec<u64> {
    let f = rep.field();
    rep.generators()
        .iter()
        .flat_map(|m| m.to_rows().into_iter().flatten().map(|x| f.index(x)))
        .collect()
}

/// Composition factors up to isomorphism with multiplicities, sorted by
/// dimension and then by generator matrices.
pub fn constituents<F: Field>(rep: &MatrixRep<F>) -> Result<Vec<(MatrixRep<F>, usize)>> {
    if rep.degree() > 64 {
        return Err(Error::TooLarge(format!("constituents in dimension {}", rep.degree())));
    }
    let mut factors = Vec::new();
    composition_factors(rep, &mut factors)?;
    factors.sort_by_key(|r| (r.degree(), matrix_key(r)));
    let mut grouped: Vec<(MatrixRep<F>, usize)> = Vec::new();
    'outer: for f in factors {
        for (g, mult) in grouped.iter_mut() {
            if are_isomorphic(g, &f)? {
                *mult += 1;
                continue 'outer;
            }
        }
        grouped.push((f, 1));
    }
    Ok(grouped)
}

/// Degree over `F_p` of `End_G(V)` for irreducible `V`.
pub fn endomorphism_field<F: Field>(rep: &MatrixRep<F>) -> Result<u32> {
    if rep.degree() > 64 {
        return Err(Error::TooLarge(format!("dimension {}", rep.degree())));
    }
    if find_submodule(rep)?.is_some() {
        return Err(Error::NotIrreducible);
    }
    Ok(endomorphism_dim(rep) as u32 * rep.field().degree())
}

/// Number of submodules of `V^m` (diagonal action) isomorphic to `V`.
///
/// Every such submodule is `{(a_1 x, …, a_m x)}` with `a ∈ E^m \ 0`; scaling
/// so the first nonzero `a_j` is one shows it contains a vector
/// `(0, …, 0, b, y_{j+1}, …, y_m)` with `b` the first standard basis vector,
/// so spinning those vectors reaches all of them.
pub fn submodule_census<F: Field>(v: &MatrixRep<F>, m: usize) -> Result<u64> {
    let n = v.degree();
    let field = v.field();
    match checked_size_pow(field.size(), n * m) {
        Some(x) if x <= EXHAUSTIVE_LIMIT && m >= 1 => {}
        _ => return Err(Error::TooLarge(format!("census of {}^{}", field.size(), n * m))),
    }
    let big = power_rep(v, m)?;
    let q = field.size();
    let gens = big.generators();
    let mut found: BTreeSet<Vec<u64>> = BTreeSet::new();
    let mut reps: Vec<Subspace<F>> = Vec::new();
    for j in 0..m {
        let free = (m - j - 1) * n;
        let count = q.pow(free as u32);
        for mut idx in 0..count {
            let mut x = vec![field.zero(); n * m];
            x[j * n] = field.one();
            for slot in x.iter_mut().skip((j + 1) * n) {
                *slot = field.element(idx % q);
                idx /= q;
            }
            let w = spin_with(field, &x, &gens);
            if w.dim() == n && found.insert(w.key()) {
                reps.push(w);
            }
        }
    }
    let mut count = 0;
    for w in &reps {
        if are_isomorphic(&sub_rep(&big, w)?, v)? {
            count += 1;
        }
    }
    Ok(count)
}

/// Census by spinning every nonzero vector of `V^m`; the reference
/// enumeration for [`submodule_census`].
pub fn submodule_census_full<F: Field>(v: &MatrixRep<F>, m: usize) -> Result<u64> {
    let n = v.degree();
    let field = v.field();
    let big = power_rep(v, m)?;
    check_exhaustive_bound(&big)?;
    let basis: Vec<Vec<F::Elem>> = (0..n * m)
        .map(|i| {
            let mut e = vec![field.zero(); n * m];
            e[i] = field.one();
            e
        })
        .collect();
    let gens = big.generators();
    let mut found: BTreeSet<Vec<u64>> = BTreeSet::new();
    let mut count = 0;
    for x in normalized_combinations(field, &basis) {
        let w = spin_with(field, &x, &gens);
        if w.dim() == n && found.insert(w.key()) && are_isomorphic(&sub_rep(&big, &w)?, v)? {
            count += 1;
        }
    }
    Ok(count)
}

fn power_rep<F: Field>(v: &MatrixRep<F>, m: usize) -> Result<MatrixRep<F>> {
    let mut acc = v.clone();
    for _ in 1..m {
        acc = acc.direct_sum(v)?;
    }
    Ok(acc)
}

/// Number of irreducible `F_p`-representations of `G` by Berman's theorem.
pub fn berman_irreducible_count(g: &TwistedGroup) -> Result<u64> {
    p_regular_class_orbits(g)
}
