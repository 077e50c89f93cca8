//! Fourier transforms H → Ĥ and Pontrjagin duality.

use crate::exactla::{Matrix, Scalar, SparseVec};
use crate::report::{Check, ValidationReport, Witness};
use crate::HopfError;

use super::haar::{haar_data, left_integral, Functional, HaarData};
use super::{dual_hopf, HopfAlgebra};

/// Matrices sending H-coordinates to Ĥ-coordinates; entry `(h, x)` is the
/// value of the image of `e_x` on `e_h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FourierMaps {
    /// `F_l(x)(h) = φ(hx)`
    pub fl: Matrix,
    /// `F_r(x)(h) = φ(xh)`
    pub fr: Matrix,
    /// `G_l(x)(h) = ψ(hx)`
    pub gl: Matrix,
    /// `G_r(x)(h) = ψ(xh)`
    pub gr: Matrix,
}

pub fn fourier_with(h: &HopfAlgebra, phi: &Functional, psi: &Functional) -> FourierMaps {
    let d = h.dim();
    let mut fl = Matrix::zeros(d, d);
    let mut fr = Matrix::zeros(d, d);
    let mut gl = Matrix::zeros(d, d);
    let mut gr = Matrix::zeros(d, d);
    for a in 0..d {
        for x in 0..d {
            let ax = h.mul_basis(a, x);
            let xa = h.mul_basis(x, a);
            fl.set(a, x, phi.eval(ax));
            fr.set(a, x, phi.eval(xa));
            gl.set(a, x, psi.eval(ax));
            gr.set(a, x, psi.eval(xa));
        }
    }
    FourierMaps { fl, fr, gl, gr }
}

/// The four transforms, with every map required to be invertible.
pub fn fourier(h: &HopfAlgebra, haar: &HaarData) -> Result<FourierMaps, HopfError> {
    let maps = fourier_with(h, &haar.phi, &haar.psi);
    for (name, m) in [("F_l", &maps.fl), ("F_r", &maps.fr), ("G_l", &maps.gl), ("G_r", &maps.gr)] {
        if !m.is_invertible() {
            return Err(HopfError::Inconsistent(format!("{name} is singular")));
        }
    }
    Ok(maps)
}

/// `Some(λ)` with `a = λ b`.
pub fn proportional_check(name: &str, a: &Matrix, b: &Matrix) -> Check {
    match a.proportionality(b) {
        Some(l) if !l.is_zero() => Check::pass(name).with_value(l),
        _ => {
            let idx = (0..a.rows())
                .flat_map(|i| (0..a.cols()).map(move |j| (i, j)))
                .find(|&(i, j)| a.get(i, j).is_zero() != b.get(i, j).is_zero())
                .unwrap_or((0, 0));
            Check::fail(
                name,
                Witness::new(vec![idx.0, idx.1], a.get(idx.0, idx.1), b.get(idx.0, idx.1)),
            )
            .with_note("matrices are not proportional")
        }
    }
}

/// `F_l(xδ) ≡ G_l(x)` and `F_r(δx) ≡ G_r(x)`, with the scalars reported.
pub fn fourier_identities(h: &HopfAlgebra, haar: &HaarData, maps: &FourierMaps) -> ValidationReport {
    let mut rep = ValidationReport::new("fourier");
    let rd = h.right_mul_matrix(&haar.delta);
    let ld = h.left_mul_matrix(&haar.delta);
    rep.push(proportional_check("F_l(x delta) ~ G_l(x)", &maps.fl.mul(&rd), &maps.gl));
    rep.push(proportional_check("F_r(delta x) ~ G_r(x)", &maps.fr.mul(&ld), &maps.gr));
    rep
}

/// Haar data of Ĥ normalized so that Pontrjagin duality is the evaluation map.
#[derive(Clone, Debug)]
pub struct Pontrjagin {
    /// `P = Ĝ_l F_l S` before rescaling, equal to `raw_scalar · ev`.
    pub raw_scalar: Scalar,
    /// `F̂_r G_r S = second_scalar · P` after rescaling.
    pub second_scalar: Scalar,
    /// Matrix of `P` in the bases `e_i` of H and `ev_{e_i}` of the double dual.
    pub p: Matrix,
    /// Rescaled left integral of Ĥ, as an element of H.
    pub phi_hat: SparseVec,
    /// `φ̂ ∘ Ŝ^{-1}`, as an element of H.
    pub psi_hat: SparseVec,
    /// Fourier transforms of Ĥ, landing in H.
    pub dual_maps: FourierMaps,
    pub report: ValidationReport,
}

/// Checks that `p` is a Hopf morphism `h → k` given by its matrix.
pub fn hopf_morphism_report(h: &HopfAlgebra, k: &HopfAlgebra, p: &Matrix) -> ValidationReport {
    let d = h.dim();
    let mut rep = ValidationReport::new("morphism");
    let img = |x: &SparseVec| SparseVec::from_dense(&p.mul_vec(&x.to_dense()));
    let img2 = |x: &SparseVec| {
        let e = k.dim();
        let mut pairs = Vec::new();
        for (q, c) in x.iter() {
            let a = img(&h.basis(q / d));
            let b = img(&h.basis(q % d));
            for (i, u) in a.iter() {
                for (j, v) in b.iter() {
                    pairs.push((i * e + j, c * &(u * v)));
                }
            }
        }
        SparseVec::from_pairs(e * e, pairs)
    };
    let mut w = None;
    'm: for i in 0..d {
        for j in 0..d {
            let l = img(h.mul_basis(i, j));
            let r = k.mul(&img(&h.basis(i)), &img(&h.basis(j)));
            if l != r {
                w = Some(Witness::new(vec![i, j], format!("{l:?}"), format!("{r:?}")));
                break 'm;
            }
        }
    }
    rep.push(Check::from_witness("multiplicative", w));
    let w = (img(&h.one()) != k.one()).then(|| Witness::new(vec![], "P(1)", "1"));
    rep.push(Check::from_witness("unital", w));
    let w = (0..d).find_map(|i| {
        let l = k.delta(&img(&h.basis(i)));
        let r = img2(&h.delta(&h.basis(i)));
        (l != r).then(|| Witness::new(vec![i], format!("{l:?}"), format!("{r:?}")))
    });
    rep.push(Check::from_witness("comultiplicative", w));
    let w = (0..d).find_map(|i| {
        let l = k.eps(&img(&h.basis(i)));
        let r = h.counit(i).clone();
        (l != r).then(|| Witness::new(vec![i], l, r))
    });
    rep.push(Check::from_witness("counital", w));
    let w = (0..d).find_map(|i| {
        let l = k.s(&img(&h.basis(i)));
        let r = img(h.s_basis(i));
        (l != r).then(|| Witness::new(vec![i], format!("{l:?}"), format!("{r:?}")))
    });
    rep.push(Check::from_witness("antipode", w));
    let inv = p.is_invertible();
    let c = if inv {
        Check::pass("bijective")
    } else {
        Check::fail("bijective", Witness::new(vec![], format!("rank {}", p.rank()), format!("rank {d}")))
    };
    rep.push(c);
    rep
}

/// Computes `P = Ĝ_l F_l S`, normalizes the dual Haar functional so that
/// `P` is the canonical evaluation isomorphism, and checks everything.
pub fn pontrjagin(h: &HopfAlgebra, haar: &HaarData) -> Result<Pontrjagin, HopfError> {
    let dual = dual_hopf(h);
    let maps = fourier(h, haar)?;
    let s = h.antipode_matrix();
    let phi_hat = left_integral(&dual)?;
    let psi_hat = phi_hat.compose(dual.antipode_inv_matrix());
    let raw = fourier_with(&dual, &phi_hat, &psi_hat);
    let p_raw = raw.gl.mul(&maps.fl).mul(s);
    let d = h.dim();
    let ev = Matrix::identity(d);
    let raw_scalar = p_raw.proportionality(&ev).ok_or_else(|| {
        HopfError::Inconsistent("Pontrjagin map is not a multiple of the evaluation map".into())
    })?;
    let k = raw_scalar.inv();
    let phi_hat = phi_hat.scale(&k);
    let psi_hat = psi_hat.scale(&k);
    let dual_maps = fourier_with(&dual, &phi_hat, &psi_hat);
    let p = dual_maps.gl.mul(&maps.fl).mul(s);
    let p2 = dual_maps.fr.mul(&maps.gr).mul(s);

    let mut report = ValidationReport::new("pontrjagin");
    report.push(Check::pass("P_raw ~ ev").with_value(&raw_scalar));
    report.push(
        Check::from_witness(
            "P = ev",
            (!p.is_identity()).then(|| Witness::new(vec![], "P", "identity")),
        ),
    );
    let mut second = proportional_check("P ~ F^_r G_r S", &p2, &p);
    let second_scalar = p2.proportionality(&p).unwrap_or_else(Scalar::zero);
    if second_scalar.is_zero() {
        second.verdict = crate::report::Verdict::Fail;
    }
    report.push(second);
    let dd = dual_hopf(&dual);
    report.extend(hopf_morphism_report(h, &dd, &p));
    Ok(Pontrjagin {
        raw_scalar,
        second_scalar,
        p,
        phi_hat: phi_hat.as_element(),
        psi_hat: psi_hat.as_element(),
        dual_maps,
        report,
    })
}

/// Convenience: Haar data plus Pontrjagin normalization.
pub fn normalized_duality(h: &HopfAlgebra) -> Result<(HaarData, Pontrjagin), HopfError> {
    let haar = haar_data(h)?;
    let p = pontrjagin(h, &haar)?;
    Ok((haar, p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::corpus::{group_algebra, sweedler, trivial, Group};

    #[test]
    fn trivial_fourier_is_one() {
        let h = trivial();
        let hd = haar_data(&h).unwrap();
        let m = fourier(&h, &hd).unwrap();
        assert!(m.fl.is_identity() && m.fr.is_identity() && m.gl.is_identity() && m.gr.is_identity());
    }

    #[test]
    fn c2_fourier_determinant() {
        let h = group_algebra(&Group::cyclic(2));
        let hd = haar_data(&h).unwrap();
        let m = fourier(&h, &hd).unwrap();
        // φ(e·e) = 1, φ(g·g) = 1, off-diagonal φ(g) = 0: determinant 1.
        assert_eq!(m.fl, Matrix::identity(2));
    }

    #[test]
    fn sweedler_identities_hold() {
        let h = sweedler();
        let hd = haar_data(&h).unwrap();
        let m = fourier(&h, &hd).unwrap();
        assert!(fourier_identities(&h, &hd, &m).all_passed());
        let p = pontrjagin(&h, &hd).unwrap();
        assert!(p.report.all_passed(), "{:?}", p.report);
    }
}
