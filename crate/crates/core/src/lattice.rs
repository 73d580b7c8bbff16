//! Integer lattices: Hermite normal form, integer kernels, exact solves and
//! canonical residues. Everything is exact; entries are arbitrary precision.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type IVec = Vec<BigInt>;

pub fn ivec(v: &[i64]) -> IVec {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn to_i64(v: &[BigInt]) -> Option<Vec<i64>> {
    v.iter().map(ToPrimitive::to_i64).collect()
}

fn axpy(dst: &mut [BigInt], q: &BigInt, src: &[BigInt]) {
    if q.is_zero() {
        return;
    }
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d -= q * s;
        }
    }
}

/// Row Hermite normal form of a list of integer vectors, tracking how each
/// output row is built from the inputs.
#[derive(Clone, Debug)]
pub struct Hnf {
    pub width: usize,
    pub inputs: usize,
    /// Nonzero rows in echelon form: positive pivots, entries above each pivot reduced into `[0, pivot)`.
    pub rows: Vec<IVec>,
    pub pivots: Vec<usize>,
    /// `combos[i]` expresses `rows[i]` in terms of the input vectors.
    pub combos: Vec<IVec>,
    /// Integer relations among the inputs (a basis of the kernel of the input map), in Hermite normal form.
    pub relations: Vec<IVec>,
}

impl Hnf {
    pub fn new(inputs: &[IVec], width: usize) -> Hnf {
        Self::build(inputs, width, true)
    }

    /// Like [`Hnf::new`] but skips the canonical form of the relation lattice.
    pub fn without_relations(inputs: &[IVec], width: usize) -> Hnf {
        Self::build(inputs, width, false)
    }

    fn build(inputs: &[IVec], width: usize, want_relations: bool) -> Hnf {
        let n = inputs.len();
        let mut rows: Vec<IVec> = inputs.to_vec();
        let mut combos: Vec<IVec> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
            .collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..width {
            if r == n {
                break;
            }
            loop {
                let best = (r..n)
                    .filter(|&i| !rows[i][col].is_zero())
                    .min_by(|&a, &b| rows[a][col].abs().cmp(&rows[b][col].abs()).then(a.cmp(&b)));
                let Some(best) = best else { break };
                rows.swap(r, best);
                combos.swap(r, best);
                let mut done = true;
                for i in r + 1..n {
                    if rows[i][col].is_zero() {
                        continue;
                    }
                    let q = rows[i][col].div_floor(&rows[r][col]);
                    let (head, tail) = rows.split_at_mut(i);
                    axpy(&mut tail[0], &q, &head[r]);
                    let (head, tail) = combos.split_at_mut(i);
                    axpy(&mut tail[0], &q, &head[r]);
                    if !rows[i][col].is_zero() {
                        done = false;
                    }
                }
                if done {
                    break;
                }
            }
            if rows.get(r).is_none_or(|row| row[col].is_zero()) {
                continue;
            }
            if rows[r][col].is_negative() {
                for x in rows[r].iter_mut().chain(combos[r].iter_mut()) {
                    *x = -&*x;
                }
            }
            for i in 0..r {
                let q = rows[i][col].div_floor(&rows[r][col]);
                let (head, tail) = rows.split_at_mut(r);
                axpy(&mut head[i], &q, &tail[0]);
                let (head, tail) = combos.split_at_mut(r);
                axpy(&mut head[i], &q, &tail[0]);
            }
            pivots.push(col);
            r += 1;
        }
        let relations = combos.split_off(r);
        rows.truncate(r);
        let relations = if want_relations && !relations.is_empty() {
            Hnf::without_relations(&relations, n).rows
        } else {
            relations
        };
        Hnf { width, inputs: n, rows, pivots, combos, relations }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Integer coefficients `c` with `sum c_i * input_i = target`, if any.
    pub fn solve(&self, target: &[BigInt]) -> Option<IVec> {
        let mut t = target.to_vec();
        let mut coeffs = vec![BigInt::zero(); self.inputs];
        for (i, &p) in self.pivots.iter().enumerate() {
            let (q, rem) = t[p].div_rem(&self.rows[i][p]);
            if !rem.is_zero() {
                return None;
            }
            axpy(&mut t, &q, &self.rows[i]);
            for (c, x) in coeffs.iter_mut().zip(&self.combos[i]) {
                *c += &q * x;
            }
        }
        t.iter().all(Zero::is_zero).then_some(coeffs)
    }

    /// Canonical representative of `v` modulo the lattice spanned by the inputs.
    pub fn residue(&self, v: &[BigInt]) -> IVec {
        let mut t = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            let q = t[p].div_floor(&self.rows[i][p]);
            axpy(&mut t, &q, &self.rows[i]);
        }
        t
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.residue(v).iter().all(Zero::is_zero)
    }
}

/// Basis (in Hermite normal form) of the integer kernel `{x : A x = 0}` of a
/// matrix given by rows of width `n`.
pub fn kernel(rows: &[IVec], n: usize) -> Vec<IVec> {
    let m = rows.len();
    let columns: Vec<IVec> = (0..n).map(|j| (0..m).map(|i| rows[i][j].clone()).collect()).collect();
    Hnf::new(&columns, m).relations
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mat_vec(rows: &[IVec], x: &[BigInt]) -> IVec {
        rows.iter().map(|r| r.iter().zip(x).map(|(a, b)| a * b).sum()).collect()
    }

    #[test]
    fn kernel_of_small_matrix() {
        let a = vec![ivec(&[1, 1, 0]), ivec(&[0, 1, 1])];
        let k = kernel(&a, 3);
        assert_eq!(k, vec![ivec(&[1, -1, 1])]);
    }

    #[test]
    fn solve_and_residue() {
        let h = Hnf::new(&[ivec(&[2, 0]), ivec(&[0, 3])], 2);
        assert_eq!(h.solve(&ivec(&[4, 6])), Some(ivec(&[2, 2])));
        assert_eq!(h.solve(&ivec(&[1, 0])), None);
        assert_eq!(h.residue(&ivec(&[5, -1])), ivec(&[1, 2]));
    }

    proptest! {
        #[test]
        fn kernel_vectors_are_in_kernel(entries in prop::collection::vec(-4i64..5, 12)) {
            let rows: Vec<IVec> = entries.chunks(4).map(ivec).collect();
            for v in kernel(&rows, 4) {
                prop_assert!(mat_vec(&rows, &v).iter().all(Zero::is_zero));
            }
        }

        #[test]
        fn rank_plus_nullity(entries in prop::collection::vec(-3i64..4, 15)) {
            let rows: Vec<IVec> = entries.chunks(5).map(ivec).collect();
            let k = kernel(&rows, 5);
            let columns: Vec<IVec> = (0..5).map(|j| rows.iter().map(|r| r[j].clone()).collect()).collect();
            prop_assert_eq!(Hnf::new(&columns, 3).rank() + k.len(), 5);
        }

        #[test]
        fn residue_is_canonical(a in prop::collection::vec(-5i64..6, 6), v in prop::collection::vec(-9i64..10, 3), c in prop::collection::vec(-3i64..4, 2)) {
            let gens: Vec<IVec> = a.chunks(3).map(ivec).collect();
            let h = Hnf::new(&gens, 3);
            let shifted: IVec = (0..3)
                .map(|j| BigInt::from(v[j]) + BigInt::from(c[0]) * &gens[0][j] + BigInt::from(c[1]) * &gens[1][j])
                .collect();
            prop_assert_eq!(h.residue(&ivec(&v)), h.residue(&shifted));
        }

        #[test]
        fn solve_recovers_combination(a in prop::collection::vec(-5i64..6, 9), c in prop::collection::vec(-3i64..4, 3)) {
            let gens: Vec<IVec> = a.chunks(3).map(ivec).collect();
            let target: IVec = (0..3).map(|j| (0..3).map(|i| BigInt::from(c[i]) * &gens[i][j]).sum()).collect();
            let h = Hnf::new(&gens, 3);
            let x = h.solve(&target).expect("target is in the span");
            let back: IVec = (0..3).map(|j| (0..3).map(|i| &x[i] * &gens[i][j]).sum()).collect();
            prop_assert_eq!(back, target);
        }
    }
}
