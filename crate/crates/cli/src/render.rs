//! ASCII drawing of a path.
//!
//! One row per level, from the highest level down to level 1. An up step
//! from `y` to `y + 1` draws `/` in the row for `y + 1`; a down step from
//! `y` to `y - 1` draws `\` in the row for `y`. Each step occupies its own
//! column. Rows carry no trailing spaces and end in a newline; the empty
//! word renders as nothing.

use dyck::{DyckWord, Step};

pub fn render(word: &DyckWord) -> String {
    let levels = word.level_profile();
    let height = levels.iter().copied().max().unwrap_or(0) as usize;
    let mut rows = vec![vec![b' '; word.len()]; height];
    for (col, (&step, &y)) in word.steps().iter().zip(&levels).enumerate() {
        // rows[0] is level 1
        let (row, glyph) = match step {
            Step::Up => (y as usize, b'/'),
            Step::Down => (y as usize - 1, b'\\'),
        };
        rows[row][col] = glyph;
    }
    let mut out = String::new();
    for row in rows.iter().rev() {
        let end = row.iter().rposition(|&c| c != b' ').map_or(0, |i| i + 1);
        out.push_str(std::str::from_utf8(&row[..end]).expect("ascii"));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> String {
        render(&DyckWord::parse(s).unwrap())
    }

    #[test]
    fn examples() {
        assert_eq!(r("ud"), "/\\\n");
        assert_eq!(r("uudd"), " /\\\n/  \\\n");
        assert_eq!(r(""), "");
    }

    #[test]
    fn six_path_shape() {
        let out = r("uduuudduuddd");
        let rows: Vec<&str> = out.lines().collect();
        assert_eq!(rows.len(), 3);
        assert_eq!(rows.iter().map(|l| l.len()).max(), Some(12));
        assert_eq!(out.matches('/').count(), 6);
        assert_eq!(out.matches('\\').count(), 6);
        assert_eq!(out, "    /\\  /\\\n   /  \\/  \\\n/\\/        \\\n");
    }
}
