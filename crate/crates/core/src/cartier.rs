//! The Cartier operator `𝒞(f dz) = (-d^{p-1}f/dz^{p-1})^{1/p} dz` and the
//! invariants read off its matrix on the standard basis.
//!
//! Matrix convention: column `i` holds the coordinates of `𝒞(θ_i)`, so
//! `𝒞(Σ c_i θ_i)` has coordinates `M · c^{(1/p)}`.

use rayon::prelude::*;

use crate::basis::{DifferentialForm, StandardBasis};
use crate::curve::Curve;
use crate::error::{Error, Result};
use crate::ff::FieldElement;
use crate::linalg::Matrix;

pub fn cartier_apply(form: &DifferentialForm) -> Result<DifferentialForm> {
    let p = form.curve().p();
    let mut f = form.coefficient.clone();
    for _ in 1..p {
        f = f.derivative();
    }
    Ok(DifferentialForm::new((-&f).pth_root()?))
}

#[derive(Debug, Clone)]
pub struct CartierMatrix {
    basis: StandardBasis,
    matrix: Matrix,
}

impl CartierMatrix {
    pub fn new(curve: &Curve) -> Result<Self> {
        let basis = StandardBasis::new(curve)?;
        let columns = (0..basis.len())
            .into_par_iter()
            .map(|i| basis.coords_raw(&cartier_apply(&basis.form(i))?))
            .collect::<Result<Vec<_>>>()?;
        let matrix = Matrix::from_columns(curve.field(), basis.len(), &columns);
        Ok(CartierMatrix { basis, matrix })
    }

    pub fn curve(&self) -> &Curve {
        self.basis.curve()
    }

    pub fn basis(&self) -> &StandardBasis {
        &self.basis
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn genus(&self) -> usize {
        self.basis.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> FieldElement {
        self.matrix.entry(i, j)
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn a_number(&self) -> usize {
        self.genus() - self.rank()
    }

    /// Coordinates of `𝒞(v)`.
    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        let f = self.matrix.field();
        let root: Vec<u32> = v.iter().map(|&c| f.pth_root(c)).collect();
        self.matrix.apply(&root)
    }

    /// Matrix `N_t` of `𝒞^t`: `N_1 = M`, `N_{t+1} = M · N_t^{(1/p)}`.
    pub fn semilinear_power(&self, t: usize) -> Matrix {
        let g = self.genus();
        if t == 0 {
            return Matrix::identity(self.matrix.field(), g);
        }
        let mut n = self.matrix.clone();
        for _ in 1..t {
            n = self.matrix.mul(&n.pth_root()).expect("square matrices of equal size");
        }
        n
    }

    /// `dim 𝒞^g(H^0(Ω))`. Iterates images of `𝒞` and stops once the dimension
    /// repeats, since `im 𝒞^{t+1} ⊆ im 𝒞^t`.
    pub fn p_rank(&self) -> usize {
        let f = self.matrix.field();
        let g = self.genus();
        let mut span = Matrix::identity(f, g);
        let mut dim = g;
        for _ in 0..g {
            let image = self.matrix.mul(&span.pth_root()).expect("conformable");
            let cols = image.column_space();
            if cols.len() == dim {
                break;
            }
            dim = cols.len();
            if dim == 0 {
                break;
            }
            span = Matrix::from_columns(f, g, &cols);
        }
        dim
    }

    /// Basis of `ker 𝒞`: Frobenius image of a nullspace basis of `M`.
    pub fn kernel_basis(&self) -> Vec<Vec<u32>> {
        let f = self.matrix.field();
        let p = f.characteristic() as u64;
        self.matrix
            .nullspace()
            .into_iter()
            .map(|v| v.into_iter().map(|c| f.pow(c, p)).collect())
            .collect()
    }

    pub fn hw_split(&self) -> HwSplit {
        let semisimple = self.p_rank();
        let nilpotent = self.genus() - semisimple;
        HwSplit { semisimple, nilpotent, nilpotent_is_kernel: self.a_number() == nilpotent }
    }
}

/// Dimensions of `H^s` and `H^n` in `H^0(Ω) = H^s ⊕ H^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HwSplit {
    pub semisimple: usize,
    pub nilpotent: usize,
    /// Whether `dim ker 𝒞 = dim H^n`, i.e. `H^n = ker 𝒞`.
    pub nilpotent_is_kernel: bool,
}

pub fn cartier_matrix(curve: &Curve) -> Result<CartierMatrix> {
    CartierMatrix::new(curve)
}

pub fn a_number(curve: &Curve) -> Result<usize> {
    Ok(CartierMatrix::new(curve)?.a_number())
}

pub fn p_rank(curve: &Curve) -> Result<usize> {
    Ok(CartierMatrix::new(curve)?.p_rank())
}

pub fn kernel_basis(curve: &Curve) -> Result<Vec<Vec<FieldElement>>> {
    let cm = CartierMatrix::new(curve)?;
    let f = curve.field();
    Ok(cm.kernel_basis().into_iter().map(|v| v.into_iter().map(|c| f.wrap(c)).collect()).collect())
}

pub fn hw_split(curve: &Curve) -> Result<HwSplit> {
    Ok(CartierMatrix::new(curve)?.hw_split())
}

/// Whether `𝒞` annihilates the form with coordinates `v`.
pub fn in_kernel(cm: &CartierMatrix, v: &[u32]) -> Result<bool> {
    if v.len() != cm.genus() {
        return Err(Error::OutOfRange(format!("vector of length {} for genus {}", v.len(), cm.genus())));
    }
    Ok(cm.apply(v).iter().all(|&c| c == 0))
}
