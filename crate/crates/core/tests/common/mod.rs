//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the code paths it is used to check.

#![allow(dead_code)]

use permbij::Permutation;

/// Rearranges `v` into the next permutation in lexicographic order.
pub fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Every word of `S_n`, lexicographically.
pub fn all_words(n: usize) -> Vec<Vec<usize>> {
    let mut v: Vec<usize> = (1..=n).collect();
    let mut out = vec![v.clone()];
    while next_permutation(&mut v) {
        out.push(v.clone());
    }
    out
}

pub fn contains_321(w: &[usize]) -> bool {
    let n = w.len();
    (0..n).any(|i| (i + 1..n).any(|j| (j + 1..n).any(|k| w[i] > w[j] && w[j] > w[k])))
}

pub fn contains_132(w: &[usize]) -> bool {
    let n = w.len();
    (0..n).any(|i| (i + 1..n).any(|j| (j + 1..n).any(|k| w[j] > w[k] && w[k] > w[i])))
}

pub fn perm(w: &[usize]) -> Permutation {
    Permutation::new(w.to_vec()).unwrap()
}

pub fn brute_321(n: usize) -> Vec<Permutation> {
    all_words(n)
        .into_iter()
        .filter(|w| !contains_321(w))
        .map(|w| perm(&w))
        .collect()
}

pub fn brute_132(n: usize) -> Vec<Permutation> {
    all_words(n)
        .into_iter()
        .filter(|w| !contains_132(w))
        .map(|w| perm(&w))
        .collect()
}

/// Least `(i, j, k)` (1-based) over all 132 occurrences, by full scan.
pub fn brute_smallest_132(w: &[usize]) -> Option<(usize, usize, usize)> {
    let n = w.len();
    let mut all = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if i < j && j < k && w[j] > w[k] && w[k] > w[i] {
                    all.push((i + 1, j + 1, k + 1));
                }
            }
        }
    }
    all.into_iter().min()
}

/// rcL-corners read directly from the 21-patterns of `w`: repeatedly take the
/// smallest 2-element and smallest 1-element among patterns lying strictly
/// above the previous pair. Returns `(v, p)` pairs, `p` a position.
pub fn intrinsic_rcl_corners(w: &[usize]) -> Vec<(usize, usize)> {
    let n = w.len();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (x + 1..n).map(move |y| (x, y)))
        .filter(|&(x, y)| w[x] > w[y])
        .collect();
    let mut out = Vec::new();
    let (mut two_floor, mut one_floor) = (0, 0);
    loop {
        let live: Vec<&(usize, usize)> = pairs
            .iter()
            .filter(|&&(x, y)| w[x] > two_floor && w[y] > one_floor)
            .collect();
        if live.is_empty() {
            return out;
        }
        let v = live.iter().map(|&&(x, _)| w[x]).min().unwrap();
        let one_val = live.iter().map(|&&(_, y)| w[y]).min().unwrap();
        let p = w.iter().position(|&z| z == one_val).unwrap() + 1;
        out.push((v, p));
        two_floor = v;
        one_floor = one_val;
    }
}

/// Even-odd ray casting for a point against a closed polygon.
pub fn point_in_polygon(pt: (f64, f64), poly: &[(f64, f64)]) -> bool {
    let (px, py) = pt;
    let mut inside = false;
    let m = poly.len();
    for a in 0..m {
        let (x1, y1) = poly[a];
        let (x2, y2) = poly[(a + 1) % m];
        if (y1 > py) != (y2 > py) {
            let x_cross = x1 + (py - y1) * (x2 - x1) / (y2 - y1);
            if px < x_cross {
                inside = !inside;
            }
        }
    }
    inside
}

/// Squares `(row, col)` whose centres lie in the region bounded by the path
/// `word` (from the lower-left corner, `u` up and `d` right) and the left
/// and top borders of the grid.
pub fn squares_left_of_path(word: &str, n: usize) -> Vec<(usize, usize)> {
    let mut poly = vec![(0.0, 0.0)];
    let (mut x, mut y) = (0.0, 0.0);
    for c in word.chars() {
        if c == 'u' {
            y += 1.0;
        } else {
            x += 1.0;
        }
        poly.push((x, y));
    }
    poly.push((0.0, n as f64));
    let mut out = Vec::new();
    for row in 1..=n {
        for col in 1..=n {
            let centre = (col as f64 - 0.5, n as f64 - row as f64 + 0.5);
            if point_in_polygon(centre, &poly) {
                out.push((row, col));
            }
        }
    }
    out
}
