//! Latin squares of 3-nets and brute-force isotopy against small group
//! multiplication tables.

use super::{MultinetError, VerifiedMultinet, WeightClass};

/// A d×d array with entries 1..=d, each row and column a permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatinSquare {
    d: usize,
    cells: Vec<Vec<u8>>,
}

impl LatinSquare {
    pub fn new(cells: Vec<Vec<u8>>) -> Result<Self, MultinetError> {
        let d = cells.len();
        let is_perm = |xs: &[u8]| {
            let mut seen = vec![false; d];
            xs.iter().all(|&x| {
                let ok = (1..=d as u8).contains(&x) && !seen[x as usize - 1];
                if ok {
                    seen[x as usize - 1] = true;
                }
                ok
            })
        };
        if d == 0 || cells.iter().any(|row| row.len() != d || !is_perm(row)) {
            return Err(MultinetError::NotLatin);
        }
        for j in 0..d {
            let col: Vec<u8> = cells.iter().map(|row| row[j]).collect();
            if !is_perm(&col) {
                return Err(MultinetError::NotLatin);
            }
        }
        Ok(LatinSquare { d, cells })
    }

    pub fn order(&self) -> usize {
        self.d
    }

    /// 1-based symbol at (row, col), 0-based indices.
    pub fn cell(&self, row: usize, col: usize) -> u8 {
        self.cells[row][col]
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.cells
    }
}

impl std::fmt::Display for LatinSquare {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for row in &self.cells {
            let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// The group families small nets realize.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(u32),
    Klein,
    Dihedral(u32),
}

impl GroupSpec {
    pub fn order(&self) -> u32 {
        match self {
            GroupSpec::Cyclic(n) => *n,
            GroupSpec::Klein => 4,
            GroupSpec::Dihedral(n) => 2 * n,
        }
    }
}

impl std::fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "cyclic:{n}"),
            GroupSpec::Klein => write!(f, "klein"),
            GroupSpec::Dihedral(n) => write!(f, "dihedral:{n}"),
        }
    }
}

/// The Cayley table with identity first, orders up to 12.
pub fn group_table(g: &GroupSpec) -> Result<LatinSquare, MultinetError> {
    let order = g.order();
    if order == 0 || order > 12 {
        return Err(MultinetError::UnsupportedGroup(order));
    }
    let d = order as usize;
    let cells: Vec<Vec<u8>> = match g {
        GroupSpec::Cyclic(n) => (0..d)
            .map(|i| (0..d).map(|j| ((i + j) % *n as usize) as u8 + 1).collect())
            .collect(),
        GroupSpec::Klein => {
            // e, a, b, ab with a² = b² = e
            let mul = |x: usize, y: usize| x ^ y;
            (0..4).map(|i| (0..4).map(|j| mul(i, j) as u8 + 1).collect()).collect()
        }
        GroupSpec::Dihedral(n) => {
            let n = *n as usize;
            // element i < n is the rotation r^i, element n+i the reflection s·r^i
            let mul = |x: usize, y: usize| -> usize {
                let (i, si) = if x < n { (x, false) } else { (x - n, true) };
                let (j, sj) = if y < n { (y, false) } else { (y - n, true) };
                // (s^a r^i)(s^b r^j) = s^(a+b) r^(±i + j)
                let rot = if sj { (n + j - i % n) % n } else { (i + j) % n };
                let refl = si ^ sj;
                if refl {
                    n + rot
                } else {
                    rot
                }
            };
            (0..d).map(|i| (0..d).map(|j| mul(i, j) as u8 + 1).collect()).collect()
        }
    };
    LatinSquare::new(cells)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    heap(&mut items, n, &mut out);
    out
}

fn heap(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(items.clone());
        return;
    }
    for i in 0..k {
        heap(items, k - 1, out);
        if k % 2 == 0 {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
}

/// Decides isotopy of `l` to the multiplication table of `g` by exhausting
/// row and column permutations and deriving the symbol permutation from the
/// first row.
pub fn isotopic_to_group(l: &LatinSquare, g: &GroupSpec) -> Result<bool, MultinetError> {
    let d = l.order();
    if d > 6 {
        return Err(MultinetError::OrderTooLarge(d));
    }
    if g.order() as usize != d {
        return Err(MultinetError::OrderMismatch {
            group: g.order() as usize,
            square: d,
        });
    }
    let target = group_table(g)?;
    let perms = permutations(d);
    for rows in &perms {
        'cols: for cols in &perms {
            // symbol map forced by the first target row
            let mut sym = vec![0u8; d + 1];
            for j in 0..d {
                sym[l.cell(rows[0], cols[j]) as usize] = target.cell(0, j);
            }
            for i in 1..d {
                for j in 0..d {
                    if sym[l.cell(rows[i], cols[j]) as usize] != target.cell(i, j) {
                        continue 'cols;
                    }
                }
            }
            return Ok(true);
        }
    }
    Ok(false)
}

/// Latin square of a verified 3-net: rows are the lines of block 1, columns
/// of block 2, both in canonical coordinate order; the symbol is the index
/// of the block-3 line through the base point on row ∩ column.
pub(super) fn extract(net: &VerifiedMultinet) -> Result<LatinSquare, MultinetError> {
    if net.k() != 3 {
        return Err(MultinetError::NotThreeBlocks);
    }
    if net.weight_class() != WeightClass::Net {
        return Err(MultinetError::NotANet);
    }
    let candidate = net.candidate();
    let analysis = net.analysis();
    let d = net.d() as usize;

    // global flat indices of each block, sorted by canonical key
    let lines: Vec<(usize, &super::MultiLine)> = candidate.flat_lines().collect();
    let block_sorted = |b: usize| -> Vec<usize> {
        let mut idx: Vec<usize> = (0..lines.len()).filter(|&i| lines[i].0 == b).collect();
        idx.sort_by_key(|&i| lines[i].1.line.canonical_key());
        idx
    };
    let (b1, b2, b3) = (block_sorted(0), block_sorted(1), block_sorted(2));

    let mut cells = vec![vec![0u8; d]; d];
    for (i, &li) in b1.iter().enumerate() {
        for (j, &lj) in b2.iter().enumerate() {
            let shared = analysis.per_line[li]
                .iter()
                .find(|p| analysis.per_line[lj].contains(p))
                .copied()
                .ok_or(MultinetError::NotANet)?;
            let third = analysis.base[shared]
                .incident_lines
                .iter()
                .find_map(|&g| b3.iter().position(|&x| x == g))
                .ok_or(MultinetError::NotANet)?;
            cells[i][j] = third as u8 + 1;
        }
    }
    LatinSquare::new(cells)
}
