//! Named small specs used by tests and the command line.

use alloc::vec;

use crate::algebra::Matrix;
use crate::constructions::{CycleBlock, CycleFamilySpec, MatrixBlock, MatrixFamilySpec};

fn m(p: u32, rows: &[&[i64]]) -> Matrix {
    Matrix::from_rows(p, rows).expect("catalog matrices are well formed")
}

fn block2() -> (Matrix, Matrix) {
    (m(2, &[&[0, 1], &[1, 0]]), m(2, &[&[0, 1], &[1, 1]]))
}

/// Order 72, simple.
pub fn cf72() -> CycleFamilySpec {
    let (g1, f1) = block2();
    CycleFamilySpec {
        blocks: vec![
            CycleBlock {
                p: 2,
                gram: g1,
                f: f1,
                m: 1,
                r: 1,
            },
            CycleBlock {
                p: 3,
                gram: m(3, &[&[1]]),
                f: m(3, &[&[-1]]),
                m: 1,
                r: 1,
            },
        ],
    }
}

/// Order 216, not simple: `f_2 − id` is singular.
pub fn ns216() -> CycleFamilySpec {
    let (g1, f1) = block2();
    CycleFamilySpec {
        blocks: vec![
            CycleBlock {
                p: 2,
                gram: g1,
                f: f1,
                m: 1,
                r: 1,
            },
            CycleBlock {
                p: 3,
                gram: m(3, &[&[1, 0], &[0, 1]]),
                f: m(3, &[&[-1, 0], &[0, 1]]),
                m: 1,
                r: 1,
            },
        ],
    }
}

/// Matrix family with the data of [`cf72`].
pub fn mf72() -> MatrixFamilySpec {
    let (g1, f1) = block2();
    MatrixFamilySpec {
        blocks: vec![
            MatrixBlock {
                p: 2,
                gram: g1,
                f: f1,
                r: 1,
            },
            MatrixBlock {
                p: 3,
                gram: m(3, &[&[1]]),
                f: m(3, &[&[-1]]),
                r: 1,
            },
        ],
    }
}

/// Matrix family with the data of [`ns216`].
pub fn ns_matrix216() -> MatrixFamilySpec {
    let (g1, f1) = block2();
    MatrixFamilySpec {
        blocks: vec![
            MatrixBlock {
                p: 2,
                gram: g1,
                f: f1,
                r: 1,
            },
            MatrixBlock {
                p: 3,
                gram: m(3, &[&[1, 0], &[0, 1]]),
                f: m(3, &[&[-1, 0], &[0, 1]]),
                r: 1,
            },
        ],
    }
}
