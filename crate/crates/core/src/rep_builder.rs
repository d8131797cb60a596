//! Explicit matrices for the absolutely irreducible representations
//! `ρ_{χ̄,λ}` and their `F_p`-forms `π`.
//!
//! Labels are tied to fixed roots of unity: for a pair with character of
//! order `d` and `λ` of order `d_λ`, the coefficient field is
//! `E₀ = F_p(μ_N)` with `N = lcm(d, d_λ)`, and `ζ_k = g^{(|E₀|−1)/k}` for
//! the fixed generator `g` of `E₀`. The character `c` sends `t₀` to
//! `ζ_d^{c d / e}` and `λ = ζ_{d_λ}^{log}`. Larger fields receive `E₀`
//! through the deterministic embedding.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::char_orbits::{character_orbit, lambda_bound, Lambda, PairClass, PhiOrbit};
use crate::error::{Error, Result};
use crate::ffield::{cached_field, tilde_field, Embedding, ExtField, FFElem};
use crate::field::{Field, PrimeField};
use crate::linalg::{Matrix, Subspace};
use crate::modcheck::{constituents, endomorphism_dim, sub_rep};
use crate::numtheory::{inv_mod, lcm, mult_order, pow_mod};
use crate::rep::MatrixRep;
use crate::twisted_group::TwistedGroup;

/// Largest degree accepted by the endomorphism-based checks.
pub const MAX_CHECK_DEGREE: usize = 12;

/// `E₀ = F_p(μ_N)` for `N = lcm(d, d_λ)`.
pub fn pair_field(p: u64, d: u64, lambda_order: u64) -> Result<ExtField> {
    let n = lcm(d, lambda_order);
    let m = mult_order(p, n).ok_or(Error::OrderNotAvailable(n))?;
    if m > crate::ffield::MAX_DEGREE as u64 {
        return Err(Error::DegreeTooLarge { p, m });
    }
    cached_field(p, m as u32)
}

fn zeta(field: &ExtField, k: u64) -> Result<FFElem> {
    field.root_of_unity(k)
}

/// `ρ_{χ̄,λ}` with coefficients in `E₀`.
///
/// Basis `b_0, …, b_{s−1}`: `t₀ b_i = χ(t₀)^{q^{−i}} b_i`, `σ b_i = b_{i+1}`
/// for `i < s − 1` and `σ b_{s−1} = λ b_0`, so that `σ^s = λ`.
pub fn build_rho_e0(g: &TwistedGroup, pair: &PairClass) -> Result<MatrixRep<ExtField>> {
    let orbit = &pair.orbit;
    let lam = pair.lambda;
    let (s, d) = (orbit.s as usize, orbit.d);
    if !lambda_bound(g, orbit).is_multiple_of(lam.order) {
        return Err(Error::IncompatibleParameters(format!(
            "lambda of order {} for orbit of size {s}",
            lam.order
        )));
    }
    let field = pair_field(g.p(), d, lam.order)?;
    let cprime = orbit.rep_c * d / g.e();
    let mu0 = field.pow(zeta(&field, d)?, cprime);
    let lambda = field.pow(zeta(&field, lam.order)?, lam.log);
    let qinv = inv_mod(g.q_mod_e() % d, d).expect("q is a unit mod d");
    let mut diag = Vec::with_capacity(s);
    let mut expo = 1u64;
    for _ in 0..s {
        diag.push(field.pow(mu0, expo));
        expo = expo * qinv % d.max(1);
    }
    let gen_t = Matrix::diagonal(&field, &diag);
    let mut gen_s = Matrix::zero(&field, s, s);
    for i in 0..s - 1 {
        gen_s.set(i + 1, i, field.one());
    }
    gen_s.set(0, s - 1, lambda);
    MatrixRep::new(g, gen_t, gen_s)
}

/// `ρ_{χ̄,λ}` over `l̃`.
pub fn build_rho(g: &TwistedGroup, pair: &PairClass) -> Result<MatrixRep<ExtField>> {
    let tilde = tilde_field(g.p(), g.a(), g.f()).map_err(|e| match e {
        Error::DegreeTooLarge { m, .. } => Error::FieldTooLarge(m as u32),
        other => other,
    })?;
    build_rho_over(g, pair, &tilde)
}

/// `ρ_{χ̄,λ}` over any field containing `E₀`.
pub fn build_rho_over(
    g: &TwistedGroup,
    pair: &PairClass,
    target: &ExtField,
) -> Result<MatrixRep<ExtField>> {
    let rho = build_rho_e0(g, pair)?;
    let emb = Embedding::new(rho.field(), target)?;
    rho.extend_along(&emb)
}

/// Whether `End(ρ)` is one-dimensional over the coefficient field.
pub fn is_absolutely_irreducible_witness(rho: &MatrixRep<ExtField>) -> Result<bool> {
    if rho.degree() > MAX_CHECK_DEGREE {
        return Err(Error::TooLarge(format!("degree {}", rho.degree())));
    }
    Ok(endomorphism_dim(rho) == 1)
}

/// Discrete log of `x` to the base `ζ_k` of `field`.
fn log_to_zeta(field: &ExtField, x: FFElem, k: u64) -> Result<u64> {
    let l = field.discrete_log(x)?;
    let step = (field.size() - 1) / k;
    if l % step != 0 {
        return Err(Error::OrderNotAvailable(k));
    }
    Ok(l / step % k)
}

/// Reads `(χ̄, λ)` off a representation of the classified shape: the
/// eigenvalues of `t₀` give the character orbit and `σ^s` is the scalar `λ`.
pub fn recover_pair(rho: &MatrixRep<ExtField>) -> Result<PairClass> {
    let g = rho.group();
    let field = rho.field();
    let n = rho.degree();
    let cp = rho.gen_t().charpoly();
    let mut rng = ChaCha8Rng::seed_from_u64(0x0b5e);
    let roots = cp.roots(&mut rng);
    if roots.len() != n {
        return Err(Error::NotMonomialForm(format!(
            "{} distinct eigenvalues for degree {n}",
            roots.len()
        )));
    }
    let lambda_l = rho
        .gen_s()
        .pow(n as u64)
        .as_scalar()
        .ok_or(Error::NotAScalar)?;
    let d = field.multiplicative_order(roots[0])?;
    if roots.iter().any(|&x| field.multiplicative_order(x) != Ok(d)) {
        return Err(Error::NotMonomialForm("eigenvalues of different orders".into()));
    }
    let dl = field.multiplicative_order(lambda_l)?;
    let e0 = pair_field(g.p(), d, dl)?;
    let emb = Embedding::new(&e0, field)?;
    let pre = |x: FFElem| emb.preimage(x).ok_or(Error::FieldMismatch);
    let cprime = log_to_zeta(&e0, pre(roots[0])?, d)?;
    let c = cprime * (g.e() / d) % g.e();
    let orbit = character_orbit(g, c);
    if orbit.s as usize != n {
        return Err(Error::NotMonomialForm(format!(
            "orbit of size {} in degree {n}",
            orbit.s
        )));
    }
    for &x in &roots {
        let k = log_to_zeta(&e0, pre(x)?, d)? * (g.e() / d) % g.e();
        if orbit.members.binary_search(&k).is_err() {
            return Err(Error::NotMonomialForm("eigenvalues span several orbits".into()));
        }
    }
    let log = log_to_zeta(&e0, pre(lambda_l)?, dl)?;
    let lambda = Lambda {
        order: dl,
        log,
        w: mult_order(g.p(), dl).expect("order prime to p"),
    };
    if !lambda_bound(g, &orbit).is_multiple_of(dl) {
        return Err(Error::NotMonomialForm(format!("lambda of order {dl}")));
    }
    Ok(PairClass { orbit, lambda })
}

/// The irreducible `F_p`-representation attached to a Frobenius orbit.
///
/// `ρ = ρ_{χ̄,λ}` over `E₀` is isomorphic to its twist by `x ↦ x^P`,
/// `P = p^h` with `h` the orbit size, through the monomial intertwiner
/// `b_i ↦ c_i b_{i−j}` where `q^j ≡ P (mod d)`. Composing gives a
/// semilinear `F` commuting with `G`; after rescaling so that `F^{[E₀:k]}`
/// is the identity, its fixed points form a `k`-structure with
/// `k = F_{p^h}`, and that structure viewed over `F_p` is `π`.
pub fn build_pi(g: &TwistedGroup, orbit: &PhiOrbit) -> Result<MatrixRep<PrimeField>> {
    let pair = &orbit.canonical;
    let s = pair.orbit.s as usize;
    let d = pair.orbit.d;
    let h = orbit.defdeg;
    let rho = build_rho_e0(g, pair)?;
    let field = rho.field().clone();
    let m0 = field.m() as u64;
    if !m0.is_multiple_of(h) || (s as u64) * m0 > crate::rep::MAX_RESTRICTED_DIM as u64 {
        return Err(Error::TooLarge(format!("descent from degree {m0} with s = {s}")));
    }
    let p = g.p();
    let big_p = p.checked_pow(h as u32).ok_or(Error::TooLarge(format!("{p}^{h}")))?;
    let j = (0..s as u64)
        .find(|&j| pow_mod(g.q_mod_e() % d, j, d) == big_p % d)
        .ok_or(Error::IsotypicityViolation)? as usize;
    let lam = pair.lambda;
    if (lam.log as u128 * big_p as u128 % lam.order as u128) as u64 != lam.log % lam.order {
        return Err(Error::IsotypicityViolation);
    }
    let nu = |i: usize| -> FFElem {
        if i == s - 1 {
            rho.gen_s().get(0, s - 1)
        } else {
            field.one()
        }
    };
    let mut coeff = vec![field.one(); s];
    for i in 0..s - 1 {
        let ratio = field.div(nu((i + s - j) % s), nu(i)).expect("nonzero");
        coeff[i + 1] = field.mul(coeff[i], ratio);
    }
    let apply_f = |y: &[FFElem], beta: FFElem| -> Vec<FFElem> {
        let mut out = vec![field.zero(); s];
        for i in 0..s {
            out[(i + s - j) % s] = field.mul(beta, field.mul(coeff[i], field.pow(y[i], big_p)));
        }
        out
    };
    // F^m on b_0 is the scalar ζ0
    let m = (m0 / h) as usize;
    let mut v = vec![field.zero(); s];
    v[0] = field.one();
    for _ in 0..m {
        v = apply_f(&v, field.one());
    }
    let zeta0 = v[0];
    if v.iter().skip(1).any(|&x| !field.is_zero(x)) || field.is_zero(zeta0) {
        return Err(Error::IsotypicityViolation);
    }
    // β with N_{E₀/k}(β) = ζ0⁻¹
    let order = field.size() - 1;
    let target = (order - field.discrete_log(zeta0)?) % order;
    let norm_exp = order / (big_p - 1);
    if target % norm_exp != 0 {
        return Err(Error::IsotypicityViolation);
    }
    let beta = field.pow(field.generator(), target / norm_exp);
    let fp = PrimeField::new(p);
    let dim = s * m0 as usize;
    let mut frob = Matrix::zero(&fp, dim, dim);
    for i in 0..s {
        for k in 0..m0 as usize {
            let mut y = vec![field.zero(); s];
            let mut unit = vec![0u64; m0 as usize];
            unit[k] = 1;
            y[i] = field.from_coords(&unit);
            let img = apply_f(&y, beta);
            for (blk, x) in img.iter().enumerate() {
                for (r, c) in field.coords(*x).into_iter().enumerate() {
                    frob.set(blk * m0 as usize + r, i * m0 as usize + k, c as u32);
                }
            }
        }
    }
    let fixed = frob.sub(&Matrix::identity(&fp, dim)).nullspace();
    if fixed.len() as u64 != s as u64 * h {
        return Err(Error::IsotypicityViolation);
    }
    let restricted = rho.restrict_scalars()?;
    let w = Subspace::spanned_by(&fp, dim, &fixed);
    let pi = sub_rep(&restricted, &w).map_err(|_| Error::IsotypicityViolation)?;
    debug_assert_eq!(pi.degree() as u64, orbit.degree);
    Ok(pi)
}

/// Splits `π ⊗ l̃` and reads off the parameters of each constituent.
pub fn decompose_pi_over_tilde(pi: &MatrixRep<PrimeField>) -> Result<Vec<PairClass>> {
    if pi.degree() > MAX_CHECK_DEGREE {
        return Err(Error::TooLarge(format!("degree {}", pi.degree())));
    }
    let g = pi.group();
    let tilde = tilde_field(g.p(), g.a(), g.f())?;
    let ext = pi.extend_scalars(&tilde)?;
    let mut out = Vec::new();
    for (c, mult) in constituents(&ext)? {
        let pair = recover_pair(&c)?;
        out.extend(std::iter::repeat_n(pair, mult));
    }
    out.sort_by_key(|p| p.key());
    Ok(out)
}

/// Number of distinct matrices in the image of `G`.
pub fn image_order(pi: &MatrixRep<PrimeField>) -> Result<usize> {
    let g = pi.group();
    if g.order() > crate::rep::FULL_CHECK_ORDER {
        return Err(Error::TooLarge(format!("image of order {}", g.order())));
    }
    let mut mats: Vec<Vec<Vec<u32>>> = g.elements().map(|x| pi.matrix_of(x).to_rows()).collect();
    mats.sort();
    mats.dedup();
    Ok(mats.len())
}
