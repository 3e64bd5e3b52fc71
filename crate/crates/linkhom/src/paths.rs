//! Invariant sets, path tuples, their statistics, and partial Schroeder
//! paths.
//!
//! A co-finite subset of the non-negative integers closed under adding M and
//! N encodes a k-tuple of m,n-lattice paths (k = gcd(M,N)), one per "sheet".
//! Cells are identified with integers through the content function
//! `sheet + M*y - N*x`, and the finite complement ("gaps") carries all the
//! combinatorial data: step cells, area, and diagonal inversions.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// Marker symbol for a cell: strictly below (0), a step cell (1), or above
/// the path tuple (.).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Symbol {
    Zero,
    One,
    Dot,
}

impl Symbol {
    pub fn from_char(c: char) -> Result<Symbol> {
        match c {
            '0' => Ok(Symbol::Zero),
            '1' => Ok(Symbol::One),
            '.' | '*' | '•' => Ok(Symbol::Dot),
            other => Err(Error::InvalidSymbol(other)),
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Symbol::Zero => '0',
            Symbol::One => '1',
            Symbol::Dot => '.',
        }
    }
}

/// A pair of marker sequences of lengths M and N with equal numbers of 1s.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct VWPair {
    v: Vec<Symbol>,
    w: Vec<Symbol>,
}

impl VWPair {
    pub fn new(v: Vec<Symbol>, w: Vec<Symbol>) -> Result<Self> {
        if v.is_empty() || w.is_empty() {
            return Err(Error::EmptySequence);
        }
        let v_ones = v.iter().filter(|&&s| s == Symbol::One).count();
        let w_ones = w.iter().filter(|&&s| s == Symbol::One).count();
        if v_ones != w_ones {
            return Err(Error::MismatchedOnes { v_ones, w_ones });
        }
        Ok(VWPair { v, w })
    }

    pub fn parse(v: &str, w: &str) -> Result<Self> {
        let v = v.chars().map(Symbol::from_char).collect::<Result<_>>()?;
        let w = w.chars().map(Symbol::from_char).collect::<Result<_>>()?;
        VWPair::new(v, w)
    }

    /// All zeros: the sequences describing plain path tuples.
    pub fn zeros(m: usize, n: usize) -> Self {
        VWPair {
            v: vec![Symbol::Zero; m],
            w: vec![Symbol::Zero; n],
        }
    }

    pub fn v(&self) -> &[Symbol] {
        &self.v
    }

    pub fn w(&self) -> &[Symbol] {
        &self.w
    }

    pub fn m(&self) -> usize {
        self.v.len()
    }

    pub fn n(&self) -> usize {
        self.w.len()
    }

    /// Number of 1s (the level of the attached generating function).
    pub fn ell(&self) -> usize {
        self.v.iter().filter(|&&s| s == Symbol::One).count()
    }

    pub fn is_all_dots(&self) -> bool {
        self.v.iter().all(|&s| s == Symbol::Dot) && self.w.iter().all(|&s| s == Symbol::Dot)
    }

    pub fn fronts(&self) -> (Symbol, Symbol) {
        (self.v[0], self.w[0])
    }

    /// Ones in the tails (everything after the front symbols).
    pub fn tail_ones(&self) -> usize {
        self.v[1..].iter().filter(|&&s| s == Symbol::One).count()
    }

    /// Drop both fronts and append the given symbols.
    pub fn advance(&self, av: Symbol, aw: Symbol) -> VWPair {
        let mut v: Vec<Symbol> = self.v[1..].to_vec();
        v.push(av);
        let mut w: Vec<Symbol> = self.w[1..].to_vec();
        w.push(aw);
        let out = VWPair { v, w };
        debug_assert_eq!(
            out.ell(),
            out.w.iter().filter(|&&s| s == Symbol::One).count()
        );
        out
    }

    pub fn key(&self) -> String {
        format!("{self}")
    }

    /// Whether some invariant set fits this pair: the upward closure of the
    /// cells forced above must avoid the cells forced below.
    pub fn is_realizable(&self) -> bool {
        let m = self.m() as i64;
        let n = self.n() as i64;
        let mut required: BTreeSet<i64> = BTreeSet::new();
        let mut forbidden: BTreeSet<i64> = BTreeSet::new();
        for (i, &s) in self.v.iter().enumerate() {
            let c = i as i64;
            match s {
                Symbol::Dot => {
                    required.insert(c);
                }
                Symbol::One => {
                    forbidden.insert(c);
                    required.insert(c + n);
                }
                Symbol::Zero => {
                    forbidden.insert(c);
                    forbidden.insert(c + n);
                }
            }
        }
        for (i, &s) in self.w.iter().enumerate() {
            let c = i as i64;
            match s {
                Symbol::Dot => {
                    required.insert(c);
                }
                Symbol::One => {
                    forbidden.insert(c);
                    required.insert(c + m);
                }
                Symbol::Zero => {
                    forbidden.insert(c);
                    forbidden.insert(c + m);
                }
            }
        }
        let limit = forbidden.iter().max().copied().unwrap_or(-1);
        // Close `required` upward under +M, +N within [0, limit].
        let mut stack: Vec<i64> = required.iter().copied().collect();
        let mut closure = required;
        while let Some(c) = stack.pop() {
            if forbidden.contains(&c) {
                return false;
            }
            for next in [c + m, c + n] {
                if next <= limit && closure.insert(next) {
                    stack.push(next);
                }
            }
        }
        true
    }
}

impl fmt::Display for VWPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: String = self.v.iter().map(|s| s.to_char()).collect();
        let w: String = self.w.iter().map(|s| s.to_char()).collect();
        write!(f, "{v}|{w}")
    }
}

/// Content of the cell with lower-right lattice point (x, y) in the given
/// sheet.
pub fn content(sheet: i64, x: i64, y: i64, m: i64, n: i64) -> i64 {
    sheet + m * y - n * x
}

/// Classification of a single cell relative to a path tuple.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct CellFlags {
    pub above: bool,
    pub north_step: bool,
    pub east_step: bool,
    pub strictly_below_v: bool,
    pub strictly_below_w: bool,
}

/// An M,N-invariant set, stored through its finite complement in the
/// non-negative integers.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct InvariantSet {
    m: usize,
    n: usize,
    gaps: Vec<i64>, // sorted ascending
}

impl InvariantSet {
    pub fn new(m: usize, n: usize, gaps: BTreeSet<i64>) -> Result<Self> {
        assert!(m >= 1 && n >= 1);
        for &g in &gaps {
            assert!(g >= 0, "gaps must be non-negative");
            if g >= m as i64 && !gaps.contains(&(g - m as i64)) {
                return Err(Error::ClosureViolation(g, g - m as i64));
            }
            if g >= n as i64 && !gaps.contains(&(g - n as i64)) {
                return Err(Error::ClosureViolation(g, g - n as i64));
            }
        }
        Ok(InvariantSet {
            m,
            n,
            gaps: gaps.into_iter().collect(),
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gaps(&self) -> &[i64] {
        &self.gaps
    }

    pub fn is_gap(&self, c: i64) -> bool {
        self.gaps.binary_search(&c).is_ok()
    }

    /// Whether the cell is above the path tuple (i.e. in the invariant set).
    pub fn is_above(&self, c: i64) -> bool {
        c >= 0 && !self.is_gap(c)
    }

    pub fn classify(&self, c: i64) -> CellFlags {
        assert!(c >= 0);
        if !self.is_gap(c) {
            return CellFlags {
                above: true,
                ..CellFlags::default()
            };
        }
        let north = !self.is_gap(c + self.n as i64);
        let east = !self.is_gap(c + self.m as i64);
        CellFlags {
            above: false,
            north_step: north,
            east_step: east,
            strictly_below_v: !north,
            strictly_below_w: !east,
        }
    }

    /// Cells with a north step (the path's north step is on their left
    /// boundary).
    pub fn north_cells(&self) -> Vec<i64> {
        self.gaps
            .iter()
            .copied()
            .filter(|&c| !self.is_gap(c + self.n as i64))
            .collect()
    }

    /// Cells with an east step (the path's east step is on their upper
    /// boundary).
    pub fn east_cells(&self) -> Vec<i64> {
        self.gaps
            .iter()
            .copied()
            .filter(|&c| !self.is_gap(c + self.m as i64))
            .collect()
    }

    /// The marker classification matches (v, w) cellwise on the two windows.
    pub fn fits(&self, vw: &VWPair) -> bool {
        if vw.m() != self.m || vw.n() != self.n {
            return false;
        }
        for (i, &s) in vw.v().iter().enumerate() {
            let flags = self.classify(i as i64);
            let class = if flags.above {
                Symbol::Dot
            } else if flags.north_step {
                Symbol::One
            } else {
                Symbol::Zero
            };
            if class != s {
                return false;
            }
        }
        for (i, &s) in vw.w().iter().enumerate() {
            let flags = self.classify(i as i64);
            let class = if flags.above {
                Symbol::Dot
            } else if flags.east_step {
                Symbol::One
            } else {
                Symbol::Zero
            };
            if class != s {
                return false;
            }
        }
        true
    }
}

/// One sheet's lattice path, reconstructed from the invariant set: the
/// horizontal offset of its starting point and the content of the north-step
/// cell in each row of the fundamental band (rows 1..=n, bottom up).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SheetPath {
    pub sheet: usize,
    /// x-coordinate of the path's starting lattice point (a, 0).
    pub offset: i64,
    /// Content of the north-step cell in each band row; may be negative.
    pub north_contents: Vec<i64>,
    /// Step word over {N, E} for one period, beginning with a north step.
    pub word: String,
}

/// A path tuple: an invariant set together with its derived views.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PathTuple {
    inv: InvariantSet,
    k: usize,
    north: Vec<i64>,
    east: Vec<i64>,
    ell: usize,
    area: u64,
    pdinv: u64,
    sheets: Vec<SheetPath>,
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl PathTuple {
    pub fn from_invariant_set(inv: InvariantSet) -> PathTuple {
        let m_big = inv.m as i64;
        let n_big = inv.n as i64;
        let k = gcd(inv.m, inv.n);
        let m_small = inv.m / k;
        let n_small = inv.n / k;
        let north = inv.north_cells();
        let east = inv.east_cells();
        let ell = north.iter().filter(|&&c| c < m_big).count();
        let area = inv
            .gaps
            .iter()
            .filter(|&&c| c >= m_big + n_big)
            .count() as u64;
        let mut pdinv = 0u64;
        for &c in &north {
            for &d in &inv.gaps {
                if d > c && d >= m_big && d < c + m_big {
                    pdinv += 1;
                }
            }
        }
        let max_gap = inv.gaps.last().copied().unwrap_or(-1);
        let mut sheets = Vec::with_capacity(k);
        for sheet in 0..k {
            let mut north_contents = Vec::with_capacity(n_small);
            let mut x0s = Vec::with_capacity(n_small + 1);
            for row in 1..=n_small as i64 {
                // Smallest x whose cell is not above the tuple.
                let mut x = -((max_gap + m_big * row + n_big) / n_big) - 2;
                while inv.is_above(content(sheet as i64, x, row, m_big, n_big)) {
                    x += 1;
                }
                x0s.push(x);
                north_contents.push(content(sheet as i64, x, row, m_big, n_big));
            }
            let offset = x0s[0] - 1;
            x0s.push(x0s[0] + m_small as i64);
            let mut word = String::new();
            for row in 0..n_small {
                word.push('N');
                let east_run = x0s[row + 1] - x0s[row];
                debug_assert!(east_run >= 0, "sheet path must be monotone");
                for _ in 0..east_run {
                    word.push('E');
                }
            }
            sheets.push(SheetPath {
                sheet,
                offset,
                north_contents,
                word,
            });
        }
        PathTuple {
            inv,
            k,
            north,
            east,
            ell,
            area,
            pdinv,
            sheets,
        }
    }

    pub fn invariant_set(&self) -> &InvariantSet {
        &self.inv
    }

    pub fn m(&self) -> usize {
        self.inv.m
    }

    pub fn n(&self) -> usize {
        self.inv.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn north_cells(&self) -> &[i64] {
        &self.north
    }

    pub fn east_cells(&self) -> &[i64] {
        &self.east
    }

    /// Number of basement north steps (north cells with content < M).
    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn area(&self) -> u64 {
        self.area
    }

    pub fn pdinv(&self) -> u64 {
        self.pdinv
    }

    pub fn sheets(&self) -> &[SheetPath] {
        &self.sheets
    }

    /// North-step contents of every band row, indexed by residue mod N.
    /// These determine below-ness: a cell is below the tuple exactly when
    /// its content is at most the north content of its row.
    fn row_norths(&self) -> Vec<i64> {
        let n_big = self.inv.n as i64;
        let mut by_residue = vec![i64::MIN; self.inv.n];
        for sheet in &self.sheets {
            for &nc in &sheet.north_contents {
                let r = nc.rem_euclid(n_big) as usize;
                debug_assert_eq!(by_residue[r], i64::MIN, "one north step per row");
                by_residue[r] = nc;
            }
        }
        by_residue
    }

    /// Area recomputed from the per-sheet geometry instead of the gap set.
    pub fn area_geometric(&self) -> u64 {
        let m_big = self.inv.m as i64;
        let n_big = self.inv.n as i64;
        let mut total = 0u64;
        for &nc in &self.row_norths() {
            if nc >= m_big + n_big {
                total += ((nc - (m_big + n_big)) / n_big + 1) as u64;
            }
        }
        total
    }

    /// Path diagonal inversions recomputed from the per-sheet geometry.
    pub fn pdinv_geometric(&self) -> u64 {
        let m_big = self.inv.m as i64;
        let n_big = self.inv.n as i64;
        let rows = self.row_norths();
        let below = |d: i64| -> bool { d <= rows[d.rem_euclid(n_big) as usize] };
        let mut total = 0u64;
        for &nc in &rows {
            if nc < 0 {
                continue;
            }
            for d in (nc + 1).max(m_big)..(nc + m_big) {
                if below(d) {
                    total += 1;
                }
            }
        }
        total
    }

    /// Rebuild the invariant set from the sheet geometry (round-trip check).
    pub fn to_invariant_set(&self) -> Result<InvariantSet> {
        let n_big = self.inv.n as i64;
        let rows = self.row_norths();
        let mut gaps = BTreeSet::new();
        for &nc in &rows {
            let mut c = nc;
            while c >= 0 {
                gaps.insert(c);
                c -= n_big;
            }
        }
        InvariantSet::new(self.inv.m, self.inv.n, gaps)
    }

    pub fn to_json(&self, schroeder: &SchroederPath) -> serde_json::Value {
        serde_json::json!({
            "M": self.m(),
            "N": self.n(),
            "gaps": self.inv.gaps(),
            "north": self.north,
            "east": self.east,
            "area": self.area,
            "pdinv": self.pdinv,
            "schroeder": schroeder.word(),
        })
    }
}

/// Enumerate every invariant set fitting (v, w) with area at most
/// `max_area`, as path tuples, in a deterministic order.
///
/// Gap sets are finite order ideals of the poset generated by c < c+M and
/// c < c+N; depth-first generation over cells 0..=B with
/// B = M+N+max_area*max(M,N) is exhaustive for the given area bound.
pub fn enumerate_tuples(vw: &VWPair, max_area: u64) -> Vec<PathTuple> {
    let m = vw.m() as i64;
    let n = vw.n() as i64;
    let bound = m + n + (max_area as i64) * m.max(n);

    // Cells forced below (must be gaps) and forced above by the markers.
    let mut must_gap = vec![false; (bound + 1) as usize];
    let mut must_above = vec![false; (bound + 1) as usize];
    let mark = |flags: &mut Vec<bool>, c: i64| {
        if c <= bound {
            flags[c as usize] = true;
        }
    };
    for (i, &s) in vw.v().iter().enumerate() {
        let c = i as i64;
        match s {
            Symbol::Dot => mark(&mut must_above, c),
            Symbol::One => {
                mark(&mut must_gap, c);
                mark(&mut must_above, c + n);
            }
            Symbol::Zero => {
                mark(&mut must_gap, c);
                mark(&mut must_gap, c + n);
            }
        }
    }
    for (i, &s) in vw.w().iter().enumerate() {
        let c = i as i64;
        match s {
            Symbol::Dot => mark(&mut must_above, c),
            Symbol::One => {
                mark(&mut must_gap, c);
                mark(&mut must_above, c + m);
            }
            Symbol::Zero => {
                mark(&mut must_gap, c);
                mark(&mut must_gap, c + m);
            }
        }
    }

    struct Dfs {
        m: i64,
        n: i64,
        bound: i64,
        max_area: u64,
        must_gap: Vec<bool>,
        must_above: Vec<bool>,
        current: Vec<i64>,
        out: Vec<BTreeSet<i64>>,
    }

    impl Dfs {
        fn in_current(&self, c: i64) -> bool {
            self.current.binary_search(&c).is_ok()
        }

        fn go(&mut self, cell: i64, area: u64) {
            if cell > self.bound {
                self.out.push(self.current.iter().copied().collect());
                return;
            }
            let idx = cell as usize;
            // Option 1: cell is a gap. Requires downward closure and the
            // marker and area constraints.
            let closed = (cell < self.m || self.in_current(cell - self.m))
                && (cell < self.n || self.in_current(cell - self.n));
            let new_area = if cell >= self.m + self.n { area + 1 } else { area };
            if closed && !self.must_above[idx] && new_area <= self.max_area {
                self.current.push(cell);
                self.go(cell + 1, new_area);
                self.current.pop();
            }
            // Option 2: cell is above.
            if !self.must_gap[idx] {
                self.go(cell + 1, area);
            }
        }
    }

    let mut dfs = Dfs {
        m,
        n,
        bound,
        max_area,
        must_gap,
        must_above,
        current: Vec::new(),
        out: Vec::new(),
    };
    dfs.go(0, 0);

    let mut tuples = Vec::new();
    for gaps in dfs.out {
        let inv = match InvariantSet::new(vw.m(), vw.n(), gaps) {
            Ok(inv) => inv,
            Err(_) => continue,
        };
        if inv.fits(vw) {
            tuples.push(PathTuple::from_invariant_set(inv));
        }
    }
    tuples.sort_by(|a, b| a.invariant_set().gaps().cmp(b.invariant_set().gaps()));
    tuples
}

/// A partial Schroeder path: steps E = (+1,0), V = (0,+1), D = (+1,+1) from
/// (0, ell) to (size, size), weakly above the diagonal, with no D step on
/// the diagonal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SchroederPath {
    ell: usize,
    size: usize,
    steps: Vec<char>,
}

impl SchroederPath {
    pub fn new(ell: usize, size: usize, steps: Vec<char>) -> Result<Self> {
        let mut x = 0i64;
        let mut y = ell as i64;
        for &s in &steps {
            match s {
                'E' => x += 1,
                'V' => y += 1,
                'D' => {
                    if x == y {
                        return Err(Error::InconsistentSchroeder(
                            "diagonal step on the line y = x".into(),
                        ));
                    }
                    x += 1;
                    y += 1;
                }
                other => {
                    return Err(Error::InconsistentSchroeder(format!(
                        "invalid step {other:?}"
                    )))
                }
            }
            if y < x {
                return Err(Error::InconsistentSchroeder(
                    "path dips below the line y = x".into(),
                ));
            }
        }
        if x != size as i64 || y != size as i64 {
            return Err(Error::InconsistentSchroeder(format!(
                "path ends at ({x}, {y}), expected ({size}, {size})"
            )));
        }
        Ok(SchroederPath { ell, size, steps })
    }

    pub fn parse(ell: usize, word: &str) -> Result<Self> {
        let steps: Vec<char> = word.chars().collect();
        let easts = steps.iter().filter(|&&s| s == 'E' || s == 'D').count();
        SchroederPath::new(ell, easts, steps)
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn steps(&self) -> &[char] {
        &self.steps
    }

    pub fn word(&self) -> String {
        self.steps.iter().collect()
    }
}

impl fmt::Display for SchroederPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.word())
    }
}

/// The partial Schroeder path of a path tuple.
///
/// With north-step cells c_1 < ... < c_s (gap cells only) and ell of them in
/// the basement, the square in column i, row j (i < j) must be below the
/// path when c_i < c_j < c_i + M, must carry a diagonal step when
/// c_j = c_i + M, and must be above otherwise. The path is reconstructed
/// column by column; any violation of monotonicity is a modeling bug and is
/// reported as an error.
pub fn schroeder_path(tuple: &PathTuple) -> Result<SchroederPath> {
    let cells = tuple.north_cells();
    let m_big = tuple.m() as i64;
    let size = cells.len();
    let ell = tuple.ell();
    let mut steps = Vec::new();
    let mut height = ell as i64; // path height after the previous column
    for i in 0..size {
        // Topmost row interacting with column i, and whether it is diagonal.
        let mut top = i as i64 + 1; // 1-based column index
        let mut diag = false;
        for (j, &cj) in cells.iter().enumerate().skip(i + 1) {
            if cj < cells[i] + m_big {
                top = j as i64 + 1;
            } else if cj == cells[i] + m_big {
                top = j as i64 + 1;
                diag = true;
            } else {
                break;
            }
        }
        let before = top - i64::from(diag);
        if before < height {
            return Err(Error::InconsistentSchroeder(format!(
                "column {} wants height {} but the path is already at {}",
                i + 1,
                before,
                height
            )));
        }
        for _ in 0..(before - height) {
            steps.push('V');
        }
        steps.push(if diag { 'D' } else { 'E' });
        height = top;
    }
    SchroederPath::new(ell, size, steps)
}
