//! Two-row RSK for 321-avoiders, the Dyck path built from the tableau pair,
//! and the lattice-path region that defines the image permutation.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::template::{Square, Template};

/// A standard Young tableau with at most two rows.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct TwoRowTableau {
    pub row1: Vec<usize>,
    pub row2: Vec<usize>,
}

impl TwoRowTableau {
    /// Checks the standard-tableau conditions on `{1..n}`.
    pub fn validate(&self, n: usize) -> Result<()> {
        let bad = |msg: &str| Err(Error::MalformedTableau(msg.to_string()));
        if self.row1.len() + self.row2.len() != n {
            return bad("rows do not hold exactly n cells");
        }
        if !strictly_increasing(&self.row1) || !strictly_increasing(&self.row2) {
            return bad("rows must be strictly increasing");
        }
        if self.row2.len() > self.row1.len() {
            return bad("second row longer than first");
        }
        if self.row2.iter().zip(&self.row1).any(|(b, a)| b <= a) {
            return bad("columns must be strictly increasing");
        }
        let mut seen = vec![false; n + 1];
        for &v in self.row1.iter().chain(&self.row2) {
            if v == 0 || v > n || std::mem::replace(&mut seen[v], true) {
                return bad("entries must be exactly 1..n");
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.row1.len() + self.row2.len()
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.row1.len(), self.row2.len())
    }

    /// `u` for each of `1..n` in the first row, `d` otherwise.
    fn row_word(&self, n: usize) -> Vec<Step> {
        let mut word = vec![Step::Down; n];
        for &v in &self.row1 {
            word[v - 1] = Step::Up;
        }
        word
    }
}

impl fmt::Display for TwoRowTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let line = |r: &[usize]| {
            r.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        write!(f, "{}", line(&self.row1))?;
        if !self.row2.is_empty() {
            write!(f, "\n{}", line(&self.row2))?;
        }
        Ok(())
    }
}

fn strictly_increasing(v: &[usize]) -> bool {
    v.windows(2).all(|w| w[0] < w[1])
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableauPair {
    pub insertion: TwoRowTableau,
    pub recording: TwoRowTableau,
}

/// Row insertion restricted to two rows: a bumped entry is appended to row 2.
///
/// Fails with [`Error::ThirdRow`] if the append would break row 2, which
/// happens exactly when `p` contains a 321 pattern.
pub fn rsk_tableaux(p: &Permutation) -> Result<TableauPair> {
    let mut ins = TwoRowTableau::default();
    let mut rec = TwoRowTableau::default();
    for (idx, &x) in p.entries().iter().enumerate() {
        let step = idx + 1;
        match ins.row1.iter().position(|&y| y > x) {
            None => {
                ins.row1.push(x);
                rec.row1.push(step);
            }
            Some(at) => {
                let bumped = std::mem::replace(&mut ins.row1[at], x);
                if ins.row2.last().is_some_and(|&last| last > bumped) {
                    return Err(Error::ThirdRow { value: bumped });
                }
                ins.row2.push(bumped);
                rec.row2.push(step);
                let col = ins.row2.len() - 1;
                if ins.row2[col] <= ins.row1[col] {
                    return Err(Error::ThirdRow { value: bumped });
                }
            }
        }
    }
    debug_assert!(ins.validate(p.n()).is_ok() && rec.validate(p.n()).is_ok());
    Ok(TableauPair {
        insertion: ins,
        recording: rec,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Step {
    Up,
    Down,
}

impl Step {
    pub fn flip(self) -> Self {
        match self {
            Step::Up => Step::Down,
            Step::Down => Step::Up,
        }
    }

    fn glyph(self) -> char {
        match self {
            Step::Up => 'u',
            Step::Down => 'd',
        }
    }
}

/// True iff `steps` has as many `u` as `d` and no prefix has more `d` than `u`.
pub fn validate_dyck(steps: &[Step]) -> bool {
    let mut height: i64 = 0;
    for s in steps {
        height += if *s == Step::Up { 1 } else { -1 };
        if height < 0 {
            return false;
        }
    }
    height == 0
}

/// A validated Dyck path of semilength `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        if !validate_dyck(&steps) {
            return Err(Error::InvalidDyck {
                word: steps.iter().map(|s| s.glyph()).collect(),
                reason: "unbalanced or dips below zero".into(),
            });
        }
        Ok(DyckPath { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    pub fn first_half(&self) -> &[Step] {
        &self.steps[..self.semilength()]
    }

    pub fn second_half(&self) -> &[Step] {
        &self.steps[self.semilength()..]
    }
}

pub fn word(steps: &[Step]) -> String {
    steps.iter().map(|s| s.glyph()).collect()
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&word(&self.steps))
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .trim()
            .chars()
            .map(|c| match c {
                'u' => Ok(Step::Up),
                'd' => Ok(Step::Down),
                other => Err(Error::InvalidDyck {
                    word: s.to_string(),
                    reason: format!("unexpected character {other:?}"),
                }),
            })
            .collect::<Result<Vec<_>>>()?;
        DyckPath::new(steps)
    }
}

impl TryFrom<String> for DyckPath {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<DyckPath> for String {
    fn from(p: DyckPath) -> Self {
        p.to_string()
    }
}

/// First half from the insertion tableau; second half is the recording
/// tableau's word reversed with `u` and `d` swapped.
pub fn dyck_from_tableaux(ins: &TwoRowTableau, rec: &TwoRowTableau) -> Result<DyckPath> {
    let n = ins.n();
    ins.validate(n)?;
    rec.validate(n)?;
    if ins.shape() != rec.shape() {
        return Err(Error::MalformedTableau(
            "insertion and recording shapes differ".into(),
        ));
    }
    let mut steps = ins.row_word(n);
    steps.extend(rec.row_word(n).into_iter().rev().map(Step::flip));
    debug_assert_eq!(
        steps[..n].iter().filter(|&&s| s == Step::Up).count(),
        ins.row1.len()
    );
    DyckPath::new(steps)
}

/// Squares to the left of the lattice path drawn from the lower-left corner
/// (`u` one edge up, `d` one edge right).
///
/// Row `i` from the top is crossed by the `(n+1-i)`-th up-step; its shaded
/// squares are the columns left of that crossing.
pub fn template_from_dyck(path: &DyckPath, n: usize) -> Result<Template> {
    if path.semilength() != n {
        return Err(Error::InvalidDyck {
            word: path.to_string(),
            reason: format!("length {} is not 2n for n={n}", path.steps().len()),
        });
    }
    let mut t = Template::empty(n);
    let mut x = 0;
    let mut ups = 0;
    for s in path.steps() {
        match s {
            Step::Down => x += 1,
            Step::Up => {
                ups += 1;
                let row = n + 1 - ups;
                for col in 1..=x {
                    t.insert(Square::new(row, col))?;
                }
            }
        }
    }
    Ok(t)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Edge {
    Left,
    Down,
}

/// The second half of the path traced backwards from the upper-right corner:
/// for `i = 1..n`, left if `i` is in the first row of `rec`, down otherwise.
pub fn second_half_from_top_right(rec: &TwoRowTableau, n: usize) -> Vec<Edge> {
    rec.row_word(n)
        .into_iter()
        .map(|s| {
            if s == Step::Up {
                Edge::Left
            } else {
                Edge::Down
            }
        })
        .collect()
}

/// Reads a forward second half backwards from `(n, n)`: `u` retraced is
/// a downward edge, `d` a leftward one.
pub fn retrace(second_half: &[Step]) -> Vec<Edge> {
    second_half
        .iter()
        .rev()
        .map(|s| {
            if *s == Step::Up {
                Edge::Down
            } else {
                Edge::Left
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn tab(r1: &[usize], r2: &[usize]) -> TwoRowTableau {
        TwoRowTableau {
            row1: r1.to_vec(),
            row2: r2.to_vec(),
        }
    }

    #[test]
    fn tableaux_of_worked_example() {
        let pair = rsk_tableaux(&p("14237586")).unwrap();
        assert_eq!(pair.insertion, tab(&[1, 2, 3, 5, 6], &[4, 7, 8]));
        assert_eq!(pair.recording, tab(&[1, 2, 4, 5, 7], &[3, 6, 8]));
        let pair = rsk_tableaux(&Permutation::identity(4)).unwrap();
        assert_eq!(pair.insertion, tab(&[1, 2, 3, 4], &[]));
        assert_eq!(pair.recording, tab(&[1, 2, 3, 4], &[]));
        let pair = rsk_tableaux(&p("21")).unwrap();
        assert_eq!(pair.insertion, tab(&[1], &[2]));
        assert_eq!(pair.recording, tab(&[1], &[2]));
    }

    #[test]
    fn third_row_is_refused() {
        assert_eq!(rsk_tableaux(&p("321")), Err(Error::ThirdRow { value: 2 }));
        assert!(rsk_tableaux(&p("2431")).is_err());
    }

    #[test]
    fn dyck_words() {
        let pair = rsk_tableaux(&p("14237586")).unwrap();
        let path = dyck_from_tableaux(&pair.insertion, &pair.recording).unwrap();
        assert_eq!(word(path.first_half()), "uuuduudd");
        assert_eq!(word(path.second_half()), "ududdudd");
        let single = tab(&[1, 2, 3], &[]);
        assert_eq!(
            dyck_from_tableaux(&single, &single).unwrap().to_string(),
            "uuuddd"
        );
        let pair = rsk_tableaux(&p("21")).unwrap();
        assert_eq!(
            dyck_from_tableaux(&pair.insertion, &pair.recording)
                .unwrap()
                .to_string(),
            "udud"
        );
    }

    #[test]
    fn malformed_tableau_pairs() {
        assert!(dyck_from_tableaux(&tab(&[1, 2], &[]), &tab(&[1], &[2])).is_err());
        assert!(dyck_from_tableaux(&tab(&[2], &[1]), &tab(&[2], &[1])).is_err());
        assert!(dyck_from_tableaux(&tab(&[1, 3], &[]), &tab(&[1, 3], &[])).is_err());
    }

    #[test]
    fn dyck_validation() {
        let steps = |w: &str| -> Vec<Step> {
            w.chars()
                .map(|c| if c == 'u' { Step::Up } else { Step::Down })
                .collect()
        };
        assert!(validate_dyck(&steps("uuuduuddududdudd")));
        assert!(validate_dyck(&steps("uudd")));
        assert!(!validate_dyck(&steps("duud")));
        assert!(!validate_dyck(&steps("uud")));
        assert!("uxdd".parse::<DyckPath>().is_err());
        assert!("du".parse::<DyckPath>().is_err());
    }

    #[test]
    fn path_templates() {
        let path: DyckPath = "uuuduuddududdudd".parse().unwrap();
        assert_eq!(
            template_from_dyck(&path, 8).unwrap().row_counts(),
            vec![6, 4, 3, 1, 1, 0, 0, 0]
        );
        let hug: DyckPath = "uuuudddd".parse().unwrap();
        assert!(template_from_dyck(&hug, 3).is_err());
        assert!(template_from_dyck(&hug, 4).unwrap().is_empty());
        let stair: DyckPath = "udud".parse().unwrap();
        let t = template_from_dyck(&stair, 2).unwrap();
        assert_eq!(t.squares().collect::<Vec<_>>(), vec![Square::new(1, 1)]);
    }

    #[test]
    fn top_right_rendering() {
        let pair = rsk_tableaux(&p("14237586")).unwrap();
        let path = dyck_from_tableaux(&pair.insertion, &pair.recording).unwrap();
        let edges = second_half_from_top_right(&pair.recording, 8);
        assert_eq!(edges, retrace(path.second_half()));
        use Edge::{Down as D, Left as L};
        assert_eq!(edges, vec![L, L, D, L, L, D, L, D]);
        assert_eq!(
            second_half_from_top_right(&tab(&[1, 2, 3], &[]), 3),
            vec![L, L, L]
        );
        let pair = rsk_tableaux(&p("21")).unwrap();
        assert_eq!(second_half_from_top_right(&pair.recording, 2), vec![L, D]);
    }
}
