//! Matrix representations of a [`TwistedGroup`], given by the images of the
//! two generators `t₀` and `σ`.

use crate::error::{Error, Result};
use crate::ffield::{Embedding, ExtField};
use crate::field::{Field, PrimeField};
use crate::linalg::Matrix;
use crate::twisted_group::{GroupElem, TwistedGroup};

/// Largest dimension produced by restriction of scalars.
pub const MAX_RESTRICTED_DIM: usize = 256;

/// Groups up to this order get the full homomorphism check on request.
pub const FULL_CHECK_ORDER: u64 = 200;

#[derive(Clone, Debug)]
pub struct MatrixRep<F: Field> {
    field: F,
    group: TwistedGroup,
    gen_t: Matrix<F>,
    gen_s: Matrix<F>,
}

impl<F: Field> MatrixRep<F> {
    /// Checks `gen_t^e = I`, `gen_s^f = I` and `gen_s gen_t gen_s⁻¹ = gen_t^q`.
    pub fn new(group: &TwistedGroup, gen_t: Matrix<F>, gen_s: Matrix<F>) -> Result<Self> {
        let n = gen_t.rows();
        if !gen_t.is_square() || !gen_s.is_square() || gen_s.rows() != n {
            return Err(Error::NotAHomomorphism("generator shapes differ".into()));
        }
        if !gen_t.pow(group.e()).is_identity() {
            return Err(Error::NotAHomomorphism("gen_t^e != I".into()));
        }
        if !gen_s.pow(group.f()).is_identity() {
            return Err(Error::NotAHomomorphism("gen_s^f != I".into()));
        }
        let lhs = gen_s.mul(&gen_t);
        let rhs = gen_t.pow(group.q_mod_e()).mul(&gen_s);
        if lhs != rhs {
            return Err(Error::NotAHomomorphism("gen_s gen_t != gen_t^q gen_s".into()));
        }
        Ok(MatrixRep {
            field: gen_t.field().clone(),
            group: group.clone(),
            gen_t,
            gen_s,
        })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn group(&self) -> &TwistedGroup {
        &self.group
    }

    pub fn degree(&self) -> usize {
        self.gen_t.rows()
    }

    pub fn gen_t(&self) -> &Matrix<F> {
        &self.gen_t
    }

    pub fn gen_s(&self) -> &Matrix<F> {
        &self.gen_s
    }

    pub fn generators(&self) -> [&Matrix<F>; 2] {
        [&self.gen_t, &self.gen_s]
    }

    /// The image of `(t, i) = t₀^t σ^i`.
    pub fn matrix_of(&self, g: GroupElem) -> Matrix<F> {
        self.gen_t.pow(g.t).mul(&self.gen_s.pow(g.i))
    }

    /// Verifies `ρ(gh) = ρ(g)ρ(h)` on every pair of elements.
    pub fn check_homomorphism(&self) -> Result<()> {
        let g = &self.group;
        if g.order() > FULL_CHECK_ORDER {
            return Err(Error::TooLarge(format!(
                "full homomorphism check on order {}",
                g.order()
            )));
        }
        let elems: Vec<GroupElem> = g.elements().collect();
        let mats: Vec<Matrix<F>> = elems.iter().map(|&x| self.matrix_of(x)).collect();
        for (a, ma) in elems.iter().zip(&mats) {
            for (b, mb) in elems.iter().zip(&mats) {
                let ab = g.index_of(g.mul(*a, *b));
                if ma.mul(mb) != mats[ab] {
                    return Err(Error::NotAHomomorphism(format!("fails at {a}·{b}")));
                }
            }
        }
        Ok(())
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.group != other.group || !self.field.same_as(&other.field) {
            return Err(Error::FieldMismatch);
        }
        let block = |a: &Matrix<F>, b: &Matrix<F>| {
            let (n, m) = (a.rows(), b.rows());
            let mut out = Matrix::zero(&self.field, n + m, n + m);
            for i in 0..n {
                for j in 0..n {
                    out.set(i, j, a.get(i, j));
                }
            }
            for i in 0..m {
                for j in 0..m {
                    out.set(n + i, n + j, b.get(i, j));
                }
            }
            out
        };
        MatrixRep::new(
            &self.group,
            block(&self.gen_t, &other.gen_t),
            block(&self.gen_s, &other.gen_s),
        )
    }

    /// The representation `x ↦ P⁻¹ ρ(x) P`.
    pub fn conjugate_by(&self, p: &Matrix<F>) -> Result<Self> {
        let pinv = p
            .inverse()
            .ok_or_else(|| Error::IncompatibleParameters("singular basis change".into()))?;
        MatrixRep::new(
            &self.group,
            pinv.mul(&self.gen_t).mul(p),
            pinv.mul(&self.gen_s).mul(p),
        )
    }
}

impl MatrixRep<ExtField> {
    /// Restriction of scalars to `F_p`: every entry becomes its `m × m`
    /// multiplication matrix in the basis `1, x, …, x^(m−1)`.
    pub fn restrict_scalars(&self) -> Result<MatrixRep<PrimeField>> {
        let m = self.field.m() as usize;
        let n = self.degree();
        if m * n > MAX_RESTRICTED_DIM {
            return Err(Error::TooLarge(format!("restriction to degree {}", m * n)));
        }
        let fp = PrimeField::new(self.field.p());
        let expand = |a: &Matrix<ExtField>| -> Matrix<PrimeField> {
            let f = &self.field;
            let mut out = Matrix::zero(&fp, n * m, n * m);
            for i in 0..n {
                for j in 0..n {
                    let x = a.get(i, j);
                    if f.is_zero(x) {
                        continue;
                    }
                    for c in 0..m {
                        let mut unit = vec![0u64; m];
                        unit[c] = 1;
                        let basis = f.from_coords(&unit);
                        let coords = f.coords(f.mul(x, basis));
                        for (r, &v) in coords.iter().enumerate() {
                            out.set(i * m + r, j * m + c, v as u32);
                        }
                    }
                }
            }
            out
        };
        MatrixRep::new(&self.group, expand(&self.gen_t), expand(&self.gen_s))
    }

    /// Transport along an embedding of the coefficient field.
    pub fn extend_along(&self, emb: &Embedding) -> Result<MatrixRep<ExtField>> {
        if !emb.sub().same_as(&self.field) {
            return Err(Error::FieldMismatch);
        }
        let sup = emb.sup().clone();
        MatrixRep::new(
            &self.group,
            self.gen_t.map(&sup, |x| emb.apply(x)),
            self.gen_s.map(&sup, |x| emb.apply(x)),
        )
    }
}

impl MatrixRep<PrimeField> {
    /// Extension of scalars from `F_p` to `target`.
    pub fn extend_scalars(&self, target: &ExtField) -> Result<MatrixRep<ExtField>> {
        if target.p() != self.field.p() {
            return Err(Error::FieldMismatch);
        }
        MatrixRep::new(
            &self.group,
            self.gen_t.map(target, |x| target.from_int(x as i64)),
            self.gen_s.map(target, |x| target.from_int(x as i64)),
        )
    }

    /// The same representation over the degree-1 [`ExtField`].
    pub fn as_ext(&self) -> Result<MatrixRep<ExtField>> {
        let f = crate::ffield::make_field(self.field.p(), 1)?;
        self.extend_scalars(&f)
    }
}
