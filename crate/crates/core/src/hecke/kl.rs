//! Dense table of Kazhdan–Lusztig polynomials `P_{x,w}` and the μ-function.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::group::SymmetricGroup;
use crate::laurent::LaurentPoly;
use crate::perm::Side;

/// Marker for `x ≰ w` in the dense table.
pub const NOT_BELOW: u32 = u32::MAX;

/// Largest degree for which the dense table is built.
pub const MAX_TABLE_DEGREE: usize = 7;

const BUF: usize = 16;

/// All `P_{x,w}(q)` for `S_n`, stored densely as ids into a table of
/// distinct polynomials, plus μ lists in both directions.
#[derive(Debug, Clone)]
pub struct KlTable {
    size: usize,
    table: Vec<u32>,
    polys: Vec<Vec<i64>>,
    mu_down: Vec<Vec<(u32, i64)>>,
    mu_up: Vec<Vec<(u32, i64)>>,
}

struct Interner {
    polys: Vec<Vec<i64>>,
    index: BTreeMap<Vec<i64>, u32>,
}

impl Interner {
    fn intern(&mut self, coeffs: &[i64]) -> u32 {
        if let Some(&id) = self.index.get(coeffs) {
            return id;
        }
        let id = self.polys.len() as u32;
        self.polys.push(coeffs.to_vec());
        self.index.insert(coeffs.to_vec(), id);
        id
    }
}

impl KlTable {
    /// Computes the table by the left recursion on `w = s w'` with `s` the
    /// smallest left descent:
    /// `P_{x,w} = P_{sx,w'} + q P_{x,w'} - Σ μ(z,w') q^{(ℓ(w)-ℓ(z))/2} P_{x,z}`
    /// for `sx < x`, the sum over `z` with `sz < z`, and `P_{sx,w} = P_{x,w}`.
    pub fn build(group: &SymmetricGroup) -> Result<Self> {
        let n = group.degree();
        if n > MAX_TABLE_DEGREE {
            return Err(Error::UnsupportedDegree(n));
        }
        let size = group.order();
        let mut table = alloc::vec![NOT_BELOW; size * size];
        let mut interner = Interner { polys: Vec::new(), index: BTreeMap::new() };
        let one = interner.intern(&[1]);
        let mut mu_down: Vec<Vec<(u32, i64)>> = alloc::vec![Vec::new(); size];
        table[0] = one;
        let mut buf = [0i64; BUF];
        for &w in group.by_length() {
            let Some(s) = group.first_descent(Side::Left, w) else {
                continue;
            };
            let wp = group.lmul(w, s);
            let lw = group.length(w);
            let terms: Vec<(usize, i64, usize)> = mu_down[wp as usize]
                .iter()
                .filter(|&&(z, _)| group.has_descent(Side::Left, z, s))
                .map(|&(z, m)| (z as usize, m, (lw - group.length(z)) / 2))
                .collect();
            let row_wp = wp as usize * size;
            let row_w = w as usize * size;
            for x in 0..size as u32 {
                if !group.has_descent(Side::Left, x, s) {
                    continue;
                }
                let sx = group.lmul(x, s);
                let a = table[row_wp + sx as usize];
                if a == NOT_BELOW {
                    continue;
                }
                let b = table[row_wp + x as usize];
                buf.fill(0);
                let pa = &interner.polys[a as usize];
                buf[..pa.len()].copy_from_slice(pa);
                if b != NOT_BELOW {
                    for (k, &c) in interner.polys[b as usize].iter().enumerate() {
                        buf[k + 1] += c;
                    }
                }
                for &(z, m, shift) in &terms {
                    let id = table[z * size + x as usize];
                    if id == NOT_BELOW {
                        continue;
                    }
                    for (k, &c) in interner.polys[id as usize].iter().enumerate() {
                        buf[k + shift] -= m * c;
                    }
                }
                let len = buf.iter().rposition(|&c| c != 0).map_or(0, |k| k + 1);
                let id = interner.intern(&buf[..len]);
                table[row_w + x as usize] = id;
                table[row_w + sx as usize] = id;
            }
            let mut mus = Vec::new();
            for x in 0..size as u32 {
                let id = table[row_w + x as usize];
                if id == NOT_BELOW || x == w {
                    continue;
                }
                let diff = lw - group.length(x);
                if diff % 2 == 1 {
                    let c = interner.polys[id as usize].get((diff - 1) / 2).copied().unwrap_or(0);
                    if c != 0 {
                        mus.push((x, c));
                    }
                }
            }
            mu_down[w as usize] = mus;
        }
        Ok(Self::assemble(size, table, interner.polys, mu_down))
    }

    fn assemble(size: usize, table: Vec<u32>, polys: Vec<Vec<i64>>, mu_down: Vec<Vec<(u32, i64)>>) -> Self {
        let mut mu_up: Vec<Vec<(u32, i64)>> = alloc::vec![Vec::new(); size];
        for (w, list) in mu_down.iter().enumerate() {
            for &(x, m) in list {
                mu_up[x as usize].push((w as u32, m));
            }
        }
        KlTable { size, table, polys, mu_down, mu_up }
    }

    /// Rebuilds a table from its raw parts (as written by [`KlTable::raw_parts`]),
    /// recomputing the μ lists and checking basic consistency.
    pub fn from_raw_parts(group: &SymmetricGroup, table: Vec<u32>, polys: Vec<Vec<i64>>) -> Result<Self> {
        let size = group.order();
        if table.len() != size * size {
            return Err(Error::Precondition(alloc::format!(
                "table has {} entries, expected {}",
                table.len(),
                size * size
            )));
        }
        if table.iter().any(|&id| id != NOT_BELOW && id as usize >= polys.len()) {
            return Err(Error::Precondition(alloc::string::String::from("poly id out of range")));
        }
        for w in 0..size {
            if table[w * size + w] == NOT_BELOW || polys[table[w * size + w] as usize] != [1] {
                return Err(Error::Precondition(alloc::string::String::from("diagonal entry is not 1")));
            }
        }
        let mut mu_down: Vec<Vec<(u32, i64)>> = alloc::vec![Vec::new(); size];
        for (w, list) in mu_down.iter_mut().enumerate() {
            let lw = group.length(w as u32);
            for x in 0..size {
                let id = table[w * size + x];
                if id == NOT_BELOW || x == w {
                    continue;
                }
                let lx = group.length(x as u32);
                if lx >= lw {
                    return Err(Error::Precondition(alloc::string::String::from("table is not length-triangular")));
                }
                if (lw - lx) % 2 == 1 {
                    let c = polys[id as usize].get((lw - lx - 1) / 2).copied().unwrap_or(0);
                    if c != 0 {
                        list.push((x as u32, c));
                    }
                }
            }
        }
        Ok(Self::assemble(size, table, polys, mu_down))
    }

    /// The dense id table (row `w`, column `x`) and the distinct polynomials.
    pub fn raw_parts(&self) -> (&[u32], &[Vec<i64>]) {
        (&self.table, &self.polys)
    }

    /// `n!`.
    pub fn size(&self) -> usize {
        self.size
    }

    /// Whether `x <= w` in the Bruhat order.
    pub fn leq(&self, x: u32, w: u32) -> bool {
        self.table[w as usize * self.size + x as usize] != NOT_BELOW
    }

    /// Coefficients of `P_{x,w}(q)` in increasing degree; `None` if `x ≰ w`.
    pub fn p_poly(&self, x: u32, w: u32) -> Option<&[i64]> {
        let id = self.table[w as usize * self.size + x as usize];
        (id != NOT_BELOW).then(|| self.polys[id as usize].as_slice())
    }

    /// The polynomial `p_{x,w} = v^{ℓ(w)-ℓ(x)} P_{x,w}(v^{-2})` given the
    /// length difference.
    pub fn p_laurent(&self, x: u32, w: u32, length_diff: usize) -> LaurentPoly {
        match self.p_poly(x, w) {
            None => LaurentPoly::zero(),
            Some(c) => {
                let mut coeffs = alloc::vec![0i64; length_diff + 1];
                for (k, &a) in c.iter().enumerate() {
                    coeffs[length_diff - 2 * k] = a;
                }
                LaurentPoly::from_coeffs(0, coeffs)
            }
        }
    }

    /// `(x, μ(x,w))` for `x < w` with nonzero μ.
    pub fn mu_down(&self, w: u32) -> &[(u32, i64)] {
        &self.mu_down[w as usize]
    }

    /// `(y, μ(w,y))` for `y > w` with nonzero μ.
    pub fn mu_up(&self, w: u32) -> &[(u32, i64)] {
        &self.mu_up[w as usize]
    }

    /// Number of distinct polynomials.
    pub fn distinct_polys(&self) -> usize {
        self.polys.len()
    }

    /// All `x` with `x <= w`.
    pub fn below(&self, w: u32) -> impl Iterator<Item = u32> + '_ {
        let row = &self.table[w as usize * self.size..(w as usize + 1) * self.size];
        row.iter().enumerate().filter(|(_, &id)| id != NOT_BELOW).map(|(x, _)| x as u32)
    }
}
