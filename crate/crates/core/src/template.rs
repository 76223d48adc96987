//! Shaded-square templates on an `n x n` grid and the corner data that builds them.
//!
//! Rows are counted from the top and columns from the left, both 1-based.
//! A template determines a permutation by greedy dot placement: row by row
//! from the top, put a dot in the leftmost unshaded square whose column has
//! no dot yet. The rc variant runs bottom-up and right-to-left.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{bar, Pattern, Permutation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Square {
    pub row: usize,
    pub col: usize,
}

impl Square {
    pub const fn new(row: usize, col: usize) -> Self {
        Square { row, col }
    }

    /// `(row, col) -> (n+1-row, n+1-col)`.
    pub fn bar(self, n: usize) -> Self {
        Square::new(bar(n, self.row), bar(n, self.col))
    }

    pub fn transpose(self) -> Self {
        Square::new(self.col, self.row)
    }
}

impl fmt::Display for Square {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Template {
    n: usize,
    shaded: BTreeSet<Square>,
}

impl Template {
    pub fn empty(n: usize) -> Self {
        Template {
            n,
            shaded: BTreeSet::new(),
        }
    }

    pub fn from_squares<I: IntoIterator<Item = Square>>(n: usize, squares: I) -> Result<Self> {
        let mut t = Template::empty(n);
        for sq in squares {
            t.insert(sq)?;
        }
        Ok(t)
    }

    pub fn insert(&mut self, sq: Square) -> Result<()> {
        if sq.row == 0 || sq.col == 0 || sq.row > self.n || sq.col > self.n {
            return Err(Error::SquareOutOfGrid {
                row: sq.row,
                col: sq.col,
                n: self.n,
            });
        }
        self.shaded.insert(sq);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_shaded(&self, row: usize, col: usize) -> bool {
        self.shaded.contains(&Square::new(row, col))
    }

    pub fn squares(&self) -> impl Iterator<Item = Square> + '_ {
        self.shaded.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.shaded.len()
    }

    pub fn is_empty(&self) -> bool {
        self.shaded.is_empty()
    }

    /// Number of shaded squares in each row, top to bottom.
    pub fn row_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.n];
        for sq in &self.shaded {
            counts[sq.row - 1] += 1;
        }
        counts
    }

    /// The template reflected through the centre of the grid.
    pub fn bar(&self) -> Self {
        Template {
            n: self.n,
            shaded: self.shaded.iter().map(|s| s.bar(self.n)).collect(),
        }
    }

    /// The template reflected across the main diagonal.
    pub fn transpose(&self) -> Self {
        Template {
            n: self.n,
            shaded: self.shaded.iter().map(|s| s.transpose()).collect(),
        }
    }

    /// Corners of the nested inverted L's making up a template whose L's
    /// extend to the right and bottom borders, outermost first.
    ///
    /// The outermost corner is the leftmost square of the top shaded row;
    /// each inner corner is the top-left-most shaded square strictly below
    /// and strictly right of the previous corner.
    pub fn inverted_l_corners(&self) -> Vec<Square> {
        let mut corners = Vec::new();
        let mut bound = Square::new(0, 0);
        while let Some(next) = self
            .shaded
            .iter()
            .find(|s| s.row > bound.row && s.col > bound.col)
        {
            corners.push(*next);
            bound = *next;
        }
        corners
    }
}

/// An inverted L with corner `corner`, a leg of `down` squares going down and
/// `right` squares going right, both counting the corner.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InvertedL {
    pub corner: Square,
    pub down: usize,
    pub right: usize,
}

impl InvertedL {
    pub fn squares(&self) -> impl Iterator<Item = Square> + '_ {
        let Square { row, col } = self.corner;
        (0..self.down)
            .map(move |d| Square::new(row + d, col))
            .chain((1..self.right).map(move |r| Square::new(row, col + r)))
    }

    pub fn size(&self) -> usize {
        self.down + self.right - 1
    }

    pub fn slide_to(self, corner: Square) -> Self {
        InvertedL { corner, ..self }
    }

    pub fn transpose(self) -> Self {
        InvertedL {
            corner: self.corner.transpose(),
            down: self.right,
            right: self.down,
        }
    }
}

/// Union of inverted L's as a template.
pub fn template_from_ls<'a, I>(n: usize, ls: I) -> Result<Template>
where
    I: IntoIterator<Item = &'a InvertedL>,
{
    let mut t = Template::empty(n);
    for l in ls {
        for sq in l.squares() {
            t.insert(sq)?;
        }
    }
    Ok(t)
}

/// Nested inverted L's with corners `(i, i)`, for `legs[i-1] = (down, right)`.
pub fn diagonal_ls(legs: &[(usize, usize)]) -> Vec<InvertedL> {
    legs.iter()
        .enumerate()
        .map(|(i, &(down, right))| InvertedL {
            corner: Square::new(i + 1, i + 1),
            down,
            right,
        })
        .collect()
}

/// Reads the permutation a template encodes, top row first.
pub fn realize(t: &Template) -> Result<Permutation> {
    let n = t.n();
    let mut used = vec![false; n + 1];
    let mut entries = Vec::with_capacity(n);
    for row in 1..=n {
        let col = (1..=n)
            .find(|&c| !used[c] && !t.is_shaded(row, c))
            .ok_or(Error::NotATemplate { row })?;
        used[col] = true;
        entries.push(col);
    }
    Permutation::new(entries)
}

/// Reads the permutation an rc-template encodes, bottom row first, rightmost square first.
pub fn rc_realize(t: &Template) -> Result<Permutation> {
    let n = t.n();
    let mut used = vec![false; n + 1];
    let mut entries = vec![0; n];
    for row in (1..=n).rev() {
        let col = (1..=n)
            .rev()
            .find(|&c| !used[c] && !t.is_shaded(row, c))
            .ok_or(Error::NotATemplate { row })?;
        used[col] = true;
        entries[row - 1] = col;
    }
    Permutation::new(entries)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CornerKind {
    L,
    RcL,
}

/// One corner. `L` corners are written (position, value);
/// rcL corners are conventionally written (value, position).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Corner {
    pub position: usize,
    pub value: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CornerList {
    pub kind: CornerKind,
    pub corners: Vec<Corner>,
}

impl CornerList {
    pub fn len(&self) -> usize {
        self.corners.len()
    }

    pub fn is_empty(&self) -> bool {
        self.corners.is_empty()
    }

    /// The corners as they are conventionally written: `(p, v)` for L, `(v, p)` for rcL.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.corners
            .iter()
            .map(|c| match self.kind {
                CornerKind::L => (c.position, c.value),
                CornerKind::RcL => (c.value, c.position),
            })
            .collect()
    }

    /// L lists strictly decrease in both coordinates; rcL lists strictly increase.
    pub fn is_monotone(&self) -> bool {
        self.corners.windows(2).all(|w| match self.kind {
            CornerKind::L => w[1].position < w[0].position && w[1].value < w[0].value,
            CornerKind::RcL => w[1].position > w[0].position && w[1].value > w[0].value,
        })
    }
}

impl fmt::Display for CornerList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .pairs()
            .iter()
            .map(|(a, b)| format!("({a},{b})"))
            .collect();
        f.write_str(&parts.join(","))
    }
}

/// L-corners of a 321-avoider, first corner first.
pub fn l_corners(p: &Permutation) -> Result<CornerList> {
    p.require_avoids(Pattern::P321)?;
    let inversions = p.inversions();
    let mut corners = Vec::new();
    // Bounds on the values of the 2- and 1-element of admissible 21-patterns.
    let (mut two_bound, mut one_bound) = (usize::MAX, usize::MAX);
    loop {
        let admissible = inversions
            .iter()
            .filter(|&&(x, y)| p.at(x) < two_bound && p.at(y) < one_bound);
        let mut best_two: Option<usize> = None;
        let mut best_one: Option<usize> = None;
        for &(x, y) in admissible {
            if best_two.is_none_or(|b| p.at(x) > p.at(b)) {
                best_two = Some(x);
            }
            if best_one.is_none_or(|b| p.at(y) > p.at(b)) {
                best_one = Some(y);
            }
        }
        let (Some(i), Some(j)) = (best_two, best_one) else {
            break;
        };
        corners.push(Corner {
            position: i,
            value: p.at(j),
        });
        two_bound = p.at(i);
        one_bound = p.at(j);
    }
    Ok(CornerList {
        kind: CornerKind::L,
        corners,
    })
}

/// rcL-corners: the L-corners of `rc(p)` pulled back through the bar map, sorted increasingly.
pub fn rcl_corners(p: &Permutation) -> Result<CornerList> {
    p.require_avoids(Pattern::P321)?;
    let n = p.n();
    let of_rc = l_corners(&p.rc())?;
    let mut corners: Vec<Corner> = of_rc
        .corners
        .iter()
        .map(|c| Corner {
            position: bar(n, c.position),
            value: bar(n, c.value),
        })
        .collect();
    corners.sort();
    Ok(CornerList {
        kind: CornerKind::RcL,
        corners,
    })
}

/// Union of reversed L's cornered at each L-corner, reaching the left and top borders.
pub fn build_t_sigma(p: &Permutation) -> Result<Template> {
    let corners = l_corners(p)?;
    let mut t = Template::empty(p.n());
    for c in &corners.corners {
        for j in 1..=c.value {
            t.insert(Square::new(c.position, j))?;
        }
        for i in 1..=c.position {
            t.insert(Square::new(i, c.value))?;
        }
    }
    Ok(t)
}

/// Inverted L's with corners `(i, i)` and legs of `p_i` (down) and `v_i` (right) squares.
pub fn t_hat_ls(p: &Permutation) -> Result<Vec<InvertedL>> {
    let corners = l_corners(p)?;
    let legs: Vec<(usize, usize)> = corners
        .corners
        .iter()
        .map(|c| (c.position, c.value))
        .collect();
    let ls = diagonal_ls(&legs);
    debug_assert!(ls
        .iter()
        .all(|l| l.corner.row + l.down - 1 <= p.n() && l.corner.col + l.right - 1 <= p.n()));
    Ok(ls)
}

pub fn build_t_hat(p: &Permutation) -> Result<Template> {
    template_from_ls(p.n(), &t_hat_ls(p)?)
}

/// Inverted L's at each rcL-corner `(v, p)`, with corner square `(p, v)`,
/// reaching the right and bottom borders. Outermost first.
pub fn rc_bar_ls(p: &Permutation) -> Result<Vec<InvertedL>> {
    let n = p.n();
    Ok(rcl_corners(p)?
        .corners
        .iter()
        .map(|c| InvertedL {
            corner: Square::new(c.position, c.value),
            down: bar(n, c.position),
            right: bar(n, c.value),
        })
        .collect())
}

pub fn build_t_rc_bar(p: &Permutation) -> Result<Template> {
    template_from_ls(p.n(), &rc_bar_ls(p)?)
}

/// `#` shaded, `.` unshaded, `o` dot, `@` dot on a shaded square.
pub fn render_ascii(t: &Template, dots: Option<&Permutation>) -> Result<String> {
    let n = t.n();
    if let Some(d) = dots {
        if d.n() != n {
            return Err(Error::SizeMismatch {
                expected: n,
                actual: d.n(),
            });
        }
    }
    let mut lines = Vec::with_capacity(n);
    for row in 1..=n {
        let line: String = (1..=n)
            .map(|col| {
                let dot = dots.is_some_and(|d| d.at(row) == col);
                match (t.is_shaded(row, col), dot) {
                    (false, false) => '.',
                    (true, false) => '#',
                    (false, true) => 'o',
                    (true, true) => '@',
                }
            })
            .collect();
        lines.push(line);
    }
    Ok(lines.join("\n"))
}
