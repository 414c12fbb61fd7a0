//! Quotients of `Z^n` by a sublattice, via Smith normal form.

/// The group `Z^n / L` for a sublattice `L` spanned by integer generators.
///
/// Classes are encoded as `[t_1 mod d_1, ..., t_k mod d_k, f_1, ..., f_m]`
/// where `d_i > 1` are the non-trivial invariant factors and `f_j` are the
/// free coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeQuotient {
    ambient: usize,
    generators: Vec<Vec<i64>>,
    /// Diagonal of the Smith form, length = ambient rank (zeros for the
    /// free part).
    diagonal: Vec<i64>,
    /// Unimodular row transform `U` with `U * G * V = D`.
    row_transform: Vec<Vec<i64>>,
}

impl LatticeQuotient {
    /// `generators` are vectors of length `ambient`.
    pub fn new(ambient: usize, generators: &[Vec<i64>]) -> LatticeQuotient {
        let cols = generators.len();
        // Matrix with generators as columns.
        let mut m: Vec<Vec<i64>> = (0..ambient)
            .map(|i| generators.iter().map(|g| g[i]).collect())
            .collect();
        let mut u: Vec<Vec<i64>> = (0..ambient)
            .map(|i| (0..ambient).map(|j| (i == j) as i64).collect())
            .collect();

        let mut t = 0;
        while t < ambient.min(cols) {
            // Pivot: smallest non-zero absolute value in the trailing block.
            let Some((pr, pc)) = (t..ambient)
                .flat_map(|i| (t..cols).map(move |j| (i, j)))
                .filter(|&(i, j)| m[i][j] != 0)
                .min_by_key(|&(i, j)| (m[i][j].abs(), i, j))
            else {
                break;
            };
            m.swap(t, pr);
            u.swap(t, pr);
            for row in m.iter_mut() {
                row.swap(t, pc);
            }
            loop {
                let p = m[t][t];
                let mut dirty = false;
                for i in t + 1..ambient {
                    let f = m[i][t].div_euclid(p);
                    if f != 0 {
                        for j in 0..cols {
                            m[i][j] -= f * m[t][j];
                        }
                        for j in 0..ambient {
                            u[i][j] -= f * u[t][j];
                        }
                    }
                    dirty |= m[i][t] != 0;
                }
                for j in t + 1..cols {
                    let f = m[t][j].div_euclid(p);
                    if f != 0 {
                        for row in m.iter_mut() {
                            row[j] -= f * row[t];
                        }
                    }
                    dirty |= m[t][j] != 0;
                }
                if dirty {
                    // A smaller remainder exists; move it to the pivot.
                    let (pr, pc) = (t..ambient)
                        .flat_map(|i| (t..cols).map(move |j| (i, j)))
                        .filter(|&(i, j)| m[i][j] != 0 && (i == t || j == t))
                        .min_by_key(|&(i, j)| (m[i][j].abs(), i, j))
                        .unwrap();
                    m.swap(t, pr);
                    u.swap(t, pr);
                    for row in m.iter_mut() {
                        row.swap(t, pc);
                    }
                    continue;
                }
                // Divisibility: d_t must divide the rest of the block.
                let bad = (t + 1..ambient)
                    .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                    .find(|&(i, j)| m[i][j] % p != 0);
                match bad {
                    Some((i, _)) => {
                        for j in 0..cols {
                            m[t][j] += m[i][j];
                        }
                        for j in 0..ambient {
                            u[t][j] += u[i][j];
                        }
                    }
                    None => break,
                }
            }
            if m[t][t] < 0 {
                for j in 0..cols {
                    m[t][j] = -m[t][j];
                }
                for j in 0..ambient {
                    u[t][j] = -u[t][j];
                }
            }
            t += 1;
        }
        let diagonal = (0..ambient)
            .map(|i| if i < cols { m[i][i] } else { 0 })
            .collect();
        LatticeQuotient {
            ambient,
            generators: generators.to_vec(),
            diagonal,
            row_transform: u,
        }
    }

    pub fn generators(&self) -> &[Vec<i64>] {
        &self.generators
    }

    /// Non-trivial invariant factors (`d > 1`) of the torsion part.
    pub fn invariant_factors(&self) -> Vec<i64> {
        self.diagonal.iter().copied().filter(|&d| d > 1).collect()
    }

    /// Rank of the free part.
    pub fn free_rank(&self) -> usize {
        self.diagonal.iter().filter(|&&d| d == 0).count()
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank() == 0 && self.invariant_factors().is_empty()
    }

    /// Class of `v` in the quotient.
    pub fn project(&self, v: &[i64]) -> Vec<i64> {
        let t: Vec<i64> = self
            .row_transform
            .iter()
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect();
        let mut torsion = Vec::new();
        let mut free = Vec::new();
        for (x, &d) in t.iter().zip(&self.diagonal) {
            match d {
                0 => free.push(*x),
                1 => {}
                d => torsion.push(x.rem_euclid(d)),
            }
        }
        torsion.extend(free);
        torsion
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient
    }
}
