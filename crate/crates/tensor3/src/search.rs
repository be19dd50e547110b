use perfbase_exactla::{Echelon, FqMatrix, MatrixSpace};
use perfbase_gf::{Elem, Field};
use rayon::prelude::*;

use crate::{kruskal_bound, BaseCandidate, TensorError};

/// Default step budget for the exhaustive searches.
pub const DEFAULT_GUARD: u64 = 100_000_000;

/// Environment variable overriding [`DEFAULT_GUARD`].
pub const GUARD_ENV: &str = "PERFBASE_GUARD";

/// Guard from `PERFBASE_GUARD` when set to an integer, else `default`.
pub fn guard_from_env(default: u64) -> u64 {
    std::env::var(GUARD_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(default)
}

/// Rank of a row-major `rows × cols` buffer, reduced in place.
fn rank_in_place(field: &Field, rows: usize, cols: usize, a: &mut [Elem]) -> usize {
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| a[i * cols + c] != 0) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                a.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = field.inv(a[r * cols + c]);
        for i in r + 1..rows {
            let factor = a[i * cols + c];
            if factor == 0 {
                continue;
            }
            let s = field.neg(field.mul(factor, inv));
            for j in c..cols {
                let v = a[r * cols + j];
                if v != 0 {
                    a[i * cols + j] = field.add(a[i * cols + j], field.mul(s, v));
                }
            }
        }
        r += 1;
    }
    r
}

/// Coefficients of the `t`-th projective point of `K^k`: leading nonzero
/// coordinate 1, grouped by leading position.
fn projective_point(q: u64, k: usize, mut t: u64) -> Vec<Elem> {
    let mut coeffs = vec![0; k];
    for lead in 0..k {
        let block = q.pow((k - 1 - lead) as u32);
        if t < block {
            coeffs[lead] = 1;
            for c in coeffs[lead + 1..].iter_mut().rev() {
                *c = (t % q) as Elem;
                t /= q;
            }
            return coeffs;
        }
        t -= block;
    }
    unreachable!("index beyond projective space")
}

/// Minimum rank over the nonzero members of `space`, by scanning one
/// representative per projective point. Returns `n + 1` for the zero space.
pub fn min_rank(space: &MatrixSpace, guard: u64) -> Result<usize, TensorError> {
    let (n, m) = space.shape();
    let k = space.dim();
    if k == 0 {
        return Ok(n + 1);
    }
    let field = space.field();
    let q = field.order() as u64;
    let count = q
        .checked_pow(k as u32)
        .map(|v| (v - 1) / (q - 1))
        .filter(|&c| c <= guard)
        .ok_or(TensorError::GuardExceeded { guard })?;
    let basis = space.basis_matrix();
    let best = (0..count)
        .into_par_iter()
        .map_init(
            || vec![0; n * m],
            |buf, t| {
                let coeffs = projective_point(q, k, t);
                buf.iter_mut().for_each(|x| *x = 0);
                for (i, &c) in coeffs.iter().enumerate() {
                    if c == 0 {
                        continue;
                    }
                    for (x, &b) in buf.iter_mut().zip(basis.row(i)) {
                        if b != 0 {
                            *x = field.add(*x, field.mul(c, b));
                        }
                    }
                }
                rank_in_place(field, n, m, buf)
            },
        )
        .min()
        .expect("nonempty scan");
    Ok(best)
}

/// Vectors of `K^len` with first nonzero coordinate 1, in lexicographic order.
fn normalized_vectors(field: &Field, len: usize) -> Vec<Vec<Elem>> {
    let q = field.order() as u64;
    let total = q.pow(len as u32);
    (0..total)
        .map(|mut t| {
            let mut v = vec![0; len];
            for c in v.iter_mut().rev() {
                *c = (t % q) as Elem;
                t /= q;
            }
            v
        })
        .filter(|v| v.iter().find(|&&x| x != 0) == Some(&1))
        .collect()
}

/// Every rank-one `n × m` matrix up to scalars, as `u·vᵗ` with normalized
/// `u` and `v`, ordered by `u` then `v`.
pub fn rank_one_generators(field: &Field, n: usize, m: usize) -> Vec<FqMatrix> {
    let us = normalized_vectors(field, n);
    let vs = normalized_vectors(field, m);
    us.iter()
        .flat_map(|u| vs.iter().map(move |v| FqMatrix::outer(field, u, v)))
        .collect()
}

/// Tensor rank of a space together with a minimal witnessing base.
#[derive(Clone, Debug)]
pub struct TrkResult {
    pub rank: usize,
    pub base: BaseCandidate,
    /// Search steps spent.
    pub steps: u64,
}

struct Search<'a> {
    gens: &'a [Vec<Elem>],
    size: usize,
    guard: u64,
    steps: u64,
    chosen: Vec<usize>,
}

impl Search<'_> {
    /// Depth-first search over index-increasing subsets. `span` is the span
    /// of the chosen generators and `sum` the span of target plus chosen.
    fn run(&mut self, from: usize, span: &Echelon, sum: &Echelon) -> Result<bool, TensorError> {
        if self.chosen.len() == self.size {
            return Ok(true);
        }
        let needed = self.size - self.chosen.len();
        let slack = self.size - sum.dim();
        for idx in from..self.gens.len() {
            if self.gens.len() - idx < needed {
                break;
            }
            self.steps += 1;
            if self.steps > self.guard {
                return Err(TensorError::GuardExceeded { guard: self.guard });
            }
            let g = &self.gens[idx];
            let residual = sum.reduce(g);
            let outside = residual.iter().any(|&x| x != 0);
            if outside && slack == 0 {
                continue;
            }
            let mut next_span = span.clone();
            if !next_span.insert(g) {
                continue;
            }
            let mut next_sum = sum.clone();
            if outside {
                next_sum.insert_reduced(residual);
            }
            self.chosen.push(idx);
            if self.run(idx + 1, &next_span, &next_sum)? {
                return Ok(true);
            }
            self.chosen.pop();
        }
        Ok(false)
    }
}

/// Exact tensor rank of `space` by exhaustive search over rank-one subsets.
///
/// Sizes are tried upward from `dim + d − 1` (`d` the minimum rank); for each
/// size the lexicographically least independent subset of
/// [`rank_one_generators`] whose span contains `space` is returned. The
/// search fails with [`TensorError::GuardExceeded`] after `guard` candidate
/// tests.
pub fn exhaustive_trk(space: &MatrixSpace, guard: u64) -> Result<TrkResult, TensorError> {
    let (n, m) = space.shape();
    let field = space.field();
    let dim = space.dim();
    if dim == 0 {
        return Ok(TrkResult {
            rank: 0,
            base: BaseCandidate::new(vec![], space.clone()),
            steps: 0,
        });
    }
    let d = min_rank(space, guard)?;
    let mats = rank_one_generators(field, n, m);
    let gens: Vec<Vec<Elem>> = mats.iter().map(|a| a.data().to_vec()).collect();
    let target = space.echelon();
    let mut steps = 0;
    for size in kruskal_bound(dim, d)..=n * m {
        let mut search = Search {
            gens: &gens,
            size,
            guard,
            steps,
            chosen: vec![],
        };
        let found = search.run(0, &Echelon::new(field, n * m), &target)?;
        steps = search.steps;
        if found {
            let members = search.chosen.iter().map(|&i| mats[i].clone()).collect();
            return Ok(TrkResult {
                rank: size,
                base: BaseCandidate::new(members, space.clone()),
                steps,
            });
        }
    }
    unreachable!("the matrix units always form a base")
}
