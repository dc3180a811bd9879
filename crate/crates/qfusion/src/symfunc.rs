use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::partition::Partition;

pub type PointVector = [Complex64];

fn c0() -> Complex64 {
    Complex64::new(0.0, 0.0)
}

fn c1() -> Complex64 {
    Complex64::new(1.0, 0.0)
}

/// e_0..e_len(x) from the product prod (1 + x_i t).
pub fn elementary_all(x: &PointVector) -> Vec<Complex64> {
    let mut e = vec![c1()];
    for &xi in x {
        e.push(c0());
        for r in (1..e.len()).rev() {
            let prev = e[r - 1];
            e[r] += xi * prev;
        }
    }
    e
}

/// h_0..h_m(x) from the product prod 1/(1 - x_i t).
pub fn complete_upto(m: usize, x: &PointVector) -> Vec<Complex64> {
    let mut h = vec![c0(); m + 1];
    h[0] = c1();
    for &xi in x {
        for r in 1..=m {
            let prev = h[r - 1];
            h[r] += xi * prev;
        }
    }
    h
}

pub fn elementary_eval(r: usize, x: &PointVector) -> Complex64 {
    elementary_all(x).get(r).copied().unwrap_or_else(c0)
}

pub fn complete_eval(r: usize, x: &PointVector) -> Complex64 {
    complete_upto(r, x)[r]
}

/// Determinant by LU with partial pivoting.
pub fn det(mut a: Vec<Vec<Complex64>>) -> Complex64 {
    let n = a.len();
    let mut d = c1();
    for col in 0..n {
        let piv = (col..n)
            .max_by(|&i, &j| a[i][col].norm().total_cmp(&a[j][col].norm()))
            .unwrap();
        if a[piv][col].norm() == 0.0 {
            return c0();
        }
        if piv != col {
            a.swap(piv, col);
            d = -d;
        }
        let p = a[col][col];
        d *= p;
        for i in col + 1..n {
            let f = a[i][col] / p;
            if f.norm() == 0.0 {
                continue;
            }
            for j in col..n {
                let v = a[col][j];
                a[i][j] -= f * v;
            }
        }
    }
    d
}

/// s_lambda(x) = det(h_{lambda_i - i + j}(x)).
pub fn schur_eval(lam: &Partition, x: &PointVector) -> Complex64 {
    let l = lam.len();
    if l == 0 {
        return c1();
    }
    if l > x.len() {
        return c0();
    }
    let h = complete_upto(lam.first() + l, x);
    let get = |m: i64| if m < 0 { c0() } else { h[m as usize] };
    let mat = (0..l)
        .map(|i| (0..l).map(|j| get(lam.part(i) as i64 - i as i64 + j as i64)).collect())
        .collect();
    det(mat)
}

/// s_lambda(x) = det(e_{lambda^t_i - i + j}(x)).
pub fn schur_eval_dual(lam: &Partition, x: &PointVector) -> Complex64 {
    let lt = lam.transpose();
    let l = lt.len();
    if l == 0 {
        return c1();
    }
    let e = elementary_all(x);
    let get = |m: i64| {
        if m < 0 {
            c0()
        } else {
            e.get(m as usize).copied().unwrap_or_else(c0)
        }
    };
    let mat = (0..l)
        .map(|i| (0..l).map(|j| get(lt.part(i) as i64 - i as i64 + j as i64)).collect())
        .collect();
    det(mat)
}

/// Number of semistandard tableaux of shape lam and content alpha.
pub fn kostka(lam: &Partition, alpha: &[usize]) -> Result<u64> {
    if lam.size() != alpha.iter().sum::<usize>() {
        return Err(Error::Mismatch(format!("|{lam}| != |{alpha:?}|")));
    }
    fn rec(cur: &Partition, lam: &Partition, alpha: &[usize]) -> u64 {
        match alpha.split_first() {
            None => u64::from(cur == lam),
            Some((&a, rest)) => cur
                .add_horizontal_strip(a)
                .iter()
                .filter(|nu| lam.contains(nu))
                .map(|nu| rec(nu, lam, rest))
                .sum(),
        }
    }
    Ok(rec(&Partition::empty(), lam, alpha))
}

/// Littlewood-Richardson coefficient c_{lam,mu}^{nu}: LR tableaux of shape nu/lam, content mu.
pub fn littlewood_richardson(lam: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lam.size() + mu.size() != nu.size() || !nu.contains(lam) || !nu.contains(mu) {
        return 0;
    }
    // cells in reading order: rows top to bottom, right to left
    let mut cells = Vec::new();
    for i in 0..nu.len() {
        for j in (lam.part(i)..nu.part(i)).rev() {
            cells.push((i, j));
        }
    }
    let rows = nu.len();
    let mut grid: Vec<Vec<usize>> = (0..rows).map(|i| vec![0; nu.part(i)]).collect();
    let mut count = vec![0usize; mu.len() + 1];
    fn rec(
        idx: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<usize>>,
        count: &mut Vec<usize>,
        lam: &Partition,
        nu: &Partition,
        mu: &Partition,
    ) -> u64 {
        if idx == cells.len() {
            return 1;
        }
        let (i, j) = cells[idx];
        let hi = if j + 1 < nu.part(i) { grid[i][j + 1] } else { mu.len() };
        let lo = if i > 0 && j >= lam.part(i - 1) {
            grid[i - 1][j] + 1
        } else {
            1
        };
        let mut total = 0;
        for v in lo..=hi {
            if count[v] >= mu.part(v - 1) {
                continue;
            }
            if v > 1 && count[v] + 1 > count[v - 1] {
                continue;
            }
            count[v] += 1;
            grid[i][j] = v;
            total += rec(idx + 1, cells, grid, count, lam, nu, mu);
            count[v] -= 1;
        }
        grid[i][j] = 0;
        total
    }
    rec(0, &cells, &mut grid, &mut count, lam, nu, mu)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::p;

    fn re(v: &[f64]) -> Vec<Complex64> {
        v.iter().map(|&x| Complex64::new(x, 0.0)).collect()
    }

    fn pts(seed: u64, k: usize) -> Vec<Complex64> {
        // small deterministic LCG, enough for spread-out points
        let mut s = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        (0..k)
            .map(|_| {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let a = ((s >> 33) as f64 / (1u64 << 31) as f64) - 0.5;
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let b = ((s >> 33) as f64 / (1u64 << 31) as f64) - 0.5;
                Complex64::new(a, b)
            })
            .collect()
    }

    #[test]
    fn e_h_examples() {
        let x = re(&[1.0, 2.0, 3.0]);
        assert!((elementary_eval(2, &x) - 11.0).norm() < 1e-12);
        assert!((complete_eval(2, &x) - 25.0).norm() < 1e-12);
        assert_eq!(elementary_eval(4, &x), c0());
        assert_eq!(elementary_eval(0, &x), c1());
        assert_eq!(complete_eval(0, &x), c1());
    }

    #[test]
    fn schur_examples() {
        let x = pts(1, 3);
        assert!((schur_eval(&p(&[1]), &x) - elementary_eval(1, &x)).norm() < 1e-12);
        assert!((schur_eval(&p(&[2, 1]), &re(&[1.0, 1.0, 1.0])) - 8.0).norm() < 1e-12);
        assert_eq!(schur_eval(&p(&[1, 1, 1, 1]), &x), c0());
        assert_eq!(schur_eval(&Partition::empty(), &x), c1());
    }

    #[test]
    fn jacobi_trudi_vs_dual() {
        for seed in 0..5 {
            let x = pts(seed, 4);
            for m in 0..=6 {
                for lam in Partition::all_of_size(m) {
                    let a = schur_eval(&lam, &x);
                    let b = schur_eval_dual(&lam, &x);
                    assert!((a - b).norm() < 1e-9, "{lam}: {a} vs {b}");
                }
            }
        }
    }

    #[test]
    fn cauchy_dual_identity() {
        for k in 1..=3 {
            for n in 1..=3 {
                let x = pts(7 + k as u64, k);
                let y = pts(11 + n as u64, n);
                let lhs: Complex64 = Partition::all_in_box(k, n)
                    .iter()
                    .map(|l| schur_eval(l, &x) * schur_eval(&l.transpose(), &y))
                    .sum();
                let mut rhs = c1();
                for xi in &x {
                    for yj in &y {
                        rhs *= c1() + xi * yj;
                    }
                }
                assert!((lhs - rhs).norm() < 1e-9);
            }
        }
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(kostka(&p(&[2, 1]), &[1, 1, 1]).unwrap(), 2);
        assert_eq!(kostka(&p(&[3, 2, 2]), &[3, 2, 2]).unwrap(), 1);
        assert_eq!(kostka(&p(&[1, 1, 1]), &[1, 1, 1]).unwrap(), 1);
        assert!(kostka(&p(&[2]), &[1]).is_err());
        // sum_lambda K_{lambda,1^n} f^lambda = n!
        let tot: u64 = Partition::all_of_size(4)
            .iter()
            .map(|l| kostka(l, &[1, 1, 1, 1]).unwrap().pow(2))
            .sum();
        assert_eq!(tot, 24);
    }

    #[test]
    fn lr_examples() {
        assert_eq!(littlewood_richardson(&p(&[1]), &p(&[1]), &p(&[2])), 1);
        assert_eq!(littlewood_richardson(&p(&[1]), &p(&[1]), &p(&[1, 1])), 1);
        assert_eq!(littlewood_richardson(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])), 2);
        for lam in Partition::all_in_box(3, 3) {
            assert_eq!(littlewood_richardson(&lam, &Partition::empty(), &lam), 1);
        }
    }

    #[test]
    fn lr_product_identity() {
        let x = pts(3, 4);
        for a in 0..=4 {
            for b in 0..=(4 - a).min(3) {
                for lam in Partition::all_of_size(a) {
                    for mu in Partition::all_of_size(b) {
                        let lhs = schur_eval(&lam, &x) * schur_eval(&mu, &x);
                        let rhs: Complex64 = Partition::all_of_size(a + b)
                            .iter()
                            .map(|nu| schur_eval(nu, &x) * littlewood_richardson(&lam, &mu, nu) as f64)
                            .sum();
                        assert!((lhs - rhs).norm() < 1e-9, "{lam} {mu}");
                    }
                }
            }
        }
    }
}
