//! Independent Chevalley-generator oracle shared by the root tests and acceptance.

use steinberg_lab::{Root, RootSystem, RootSystemType};

pub type Dense = Vec<Vec<i64>>;

/// Chevalley generator built from scratch: `E_ij` in `sl_{ℓ+1}`, or the split `so_{2ℓ}`
/// basis with `j' = j + ℓ`.
pub fn oracle_matrix(phi: &RootSystem, r: &Root) -> Dense {
    let n = phi.defining_dim();
    let mut m = vec![vec![0i64; n]; n];
    let pos: Vec<usize> = (0..r.0.len()).filter(|&k| r.0[k] == 1).collect();
    let neg: Vec<usize> = (0..r.0.len()).filter(|&k| r.0[k] == -1).collect();
    match phi.system_type() {
        RootSystemType::A => m[pos[0]][neg[0]] = 1,
        RootSystemType::D => {
            let l = phi.rank();
            match (pos.as_slice(), neg.as_slice()) {
                (&[i], &[j]) => {
                    m[i][j] = 1;
                    m[j + l][i + l] = -1;
                }
                (&[i, j], &[]) => {
                    m[i][j + l] = 1;
                    m[j][i + l] = -1;
                }
                (&[], &[i, j]) => {
                    m[j + l][i] = 1;
                    m[i + l][j] = -1;
                }
                _ => panic!("not a root: {r}"),
            }
        }
    }
    m
}

pub fn bracket(x: &Dense, y: &Dense) -> Dense {
    let n = x.len();
    let mut out = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                out[i][j] += x[i][k] * y[k][j] - y[i][k] * x[k][j];
            }
        }
    }
    out
}

/// The scalar `N` with `[e_a, e_b] = N e_{a+b}`, or `None` if the bracket is not a multiple.
pub fn proportionality(br: &Dense, e: &Dense) -> Option<i64> {
    let mut ratio = None;
    for (rb, re) in br.iter().zip(e) {
        for (&b, &x) in rb.iter().zip(re) {
            match (b, x) {
                (0, 0) => {}
                (_, 0) | (0, _) => return None,
                _ if b % x != 0 => return None,
                _ => {
                    let r = b / x;
                    if *ratio.get_or_insert(r) != r {
                        return None;
                    }
                }
            }
        }
    }
    ratio
}
