use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::algebra::{LinearCode, Vector};
use crate::dna::seq::DnaString;
use crate::error::{Error, Result};
use crate::groupcodes::is_reversible;

/// Largest word set accepted by the pairwise audit.
pub const MAX_EXPLICIT_WORDS: usize = 1 << 13;

/// Two equal adjacent blocks `s[start..start + size]` and
/// `s[start + size..start + 2 * size]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TandemRepeat {
    pub start: usize,
    pub size: usize,
}

/// The first tandem repeat with block size at most `l`, scanning sizes in
/// increasing order and then positions left to right.
pub fn find_tandem_repeat(s: &DnaString, l: usize) -> Result<Option<TandemRepeat>> {
    let n = s.len();
    if l < 1 || l > n / 2 {
        return Err(Error::BadRange(format!("block length {l} outside 1..={}", n / 2)));
    }
    let b = s.as_bytes();
    for size in 1..=l {
        for start in 0..=n - 2 * size {
            if b[start..start + size] == b[start + size..start + 2 * size] {
                return Ok(Some(TandemRepeat { start, size }));
            }
        }
    }
    Ok(None)
}

/// True when no two adjacent equal blocks of length at most `l` occur.
pub fn is_conflict_free(s: &DnaString, l: usize) -> Result<bool> {
    Ok(find_tandem_repeat(s, l)?.is_none())
}

/// Checks every length-3 window against the reverse-complement of each
/// window starting at or after it.
pub fn is_ss_free(s: &DnaString) -> bool {
    let b = s.as_bytes();
    if b.len() < 3 {
        return true;
    }
    let windows = b.len() - 2;
    for i in 0..windows {
        let rc = DnaString::reverse_complement_bytes(&b[i..i + 3]);
        if (i..windows).any(|j| b[j..j + 3] == rc) {
            return false;
        }
    }
    true
}

impl DnaString {
    fn reverse_complement_bytes(window: &[u8]) -> [u8; 3] {
        let c = |x: u8| match x {
            b'A' => b'T',
            b'T' => b'A',
            b'C' => b'G',
            _ => b'C',
        };
        [c(window[2]), c(window[1]), c(window[0])]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AuditMode {
    /// Pairwise check of the definitions over the given words.
    Explicit,
    /// Read the flags off the code: reversibility and the all-one vector.
    LinearShortcut,
}

/// Outcome of [`constraint_audit`].
///
/// In explicit mode `r_ok` and `rc_ok` follow the definitions literally,
/// pairs with x = y included, so a palindrome or a word equal to its own
/// reverse-complement makes them fail. The `*_excluding_images` flags skip
/// the pairs where y is exactly the image of x, and the `*_closed` flags
/// say whether the word set contains every image.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstraintReport {
    pub mode: AuditMode,
    pub d: u32,
    pub words: usize,
    pub hd_ok: bool,
    pub r_ok: bool,
    pub rc_ok: bool,
    pub r_ok_excluding_images: Option<bool>,
    pub rc_ok_excluding_images: Option<bool>,
    pub reverse_closed: bool,
    pub rc_closed: bool,
    pub gc_balanced_count: u64,
    pub r_fixed_points: u64,
    pub rc_fixed_points: u64,
    pub notes: Vec<String>,
}

fn check_lengths(words: &[Vector]) -> Result<()> {
    if let Some(first) = words.first() {
        if let Some(bad) = words.iter().find(|w| w.len() != first.len()) {
            return Err(Error::LengthMismatch { expected: first.len(), found: bad.len() });
        }
    }
    Ok(())
}

fn gc_balanced(words: &[Vector]) -> u64 {
    words.iter().filter(|w| w.len() % 2 == 0 && 2 * w.gc_weight() as usize == w.len()).count() as u64
}

/// Audits the pairwise distance constraints at distance `d`.
pub fn constraint_audit(
    words: &[Vector],
    d: u32,
    mode: AuditMode,
    code: Option<&LinearCode>,
) -> Result<ConstraintReport> {
    check_lengths(words)?;
    let r_fixed = words.iter().filter(|w| w.reverse() == **w).count() as u64;
    let rc_fixed = words.iter().filter(|w| w.reverse_complement() == **w).count() as u64;
    let mut notes = Vec::new();
    let report = match mode {
        AuditMode::Explicit => {
            if words.len() > MAX_EXPLICIT_WORDS {
                return Err(Error::TooManyWords { count: words.len(), limit: MAX_EXPLICIT_WORDS });
            }
            let set: HashSet<Vector> = words.iter().copied().collect();
            let mut hd_ok = true;
            let (mut r_ok, mut rc_ok) = (true, true);
            let (mut r_ex, mut rc_ex) = (true, true);
            for x in words {
                let xr = x.reverse();
                let xrc = x.reverse_complement();
                for y in words {
                    if x != y && x.distance(y) < d {
                        hd_ok = false;
                    }
                    if xr.distance(y) < d {
                        r_ok = false;
                        r_ex &= xr == *y;
                    }
                    if xrc.distance(y) < d {
                        rc_ok = false;
                        rc_ex &= xrc == *y;
                    }
                }
            }
            if r_fixed > 0 || rc_fixed > 0 {
                notes
                    .push(format!("{r_fixed} words equal their reverse and {rc_fixed} equal their reverse-complement"));
            }
            ConstraintReport {
                mode,
                d,
                words: words.len(),
                hd_ok,
                r_ok,
                rc_ok,
                r_ok_excluding_images: Some(r_ex),
                rc_ok_excluding_images: Some(rc_ex),
                reverse_closed: words.iter().all(|w| set.contains(&w.reverse())),
                rc_closed: words.iter().all(|w| set.contains(&w.reverse_complement())),
                gc_balanced_count: gc_balanced(words),
                r_fixed_points: r_fixed,
                rc_fixed_points: rc_fixed,
                notes,
            }
        }
        AuditMode::LinearShortcut => {
            let code = code.ok_or(Error::MissingCode)?;
            if let Some(w) = words.first() {
                if w.len() != code.len() {
                    return Err(Error::LengthMismatch { expected: code.len(), found: w.len() });
                }
            }
            let reversible = is_reversible(code);
            let ones = code.contains_all_ones();
            let hd_ok = code.dim() == 0 || !code.has_weight_below(d, crate::algebra::DEFAULT_CAP)?;
            notes.push("r_ok from reversibility of the code; rc_ok additionally needs the all-one vector".into());
            if rc_fixed > 0 {
                notes.push(format!("{rc_fixed} audited words equal their reverse-complement"));
            }
            ConstraintReport {
                mode,
                d,
                words: words.len(),
                hd_ok,
                r_ok: reversible,
                rc_ok: reversible && ones,
                r_ok_excluding_images: None,
                rc_ok_excluding_images: None,
                reverse_closed: reversible,
                rc_closed: reversible && ones,
                gc_balanced_count: gc_balanced(words),
                r_fixed_points: r_fixed,
                rc_fixed_points: rc_fixed,
                notes,
            }
        }
    };
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Field;
    use crate::dna::seq::{decode_dna, encode_dna};
    use proptest::prelude::*;

    fn dna(s: &str) -> DnaString {
        s.parse().unwrap()
    }

    #[test]
    fn conflict_free_examples() {
        let s = dna("ACTGACTGTGAC");
        assert!(!is_conflict_free(&s, 4).unwrap());
        // ACTG|ACTG is the only repeat of size 3 or 4, but TG|TG at
        // position 6 already breaks the size-2 condition
        assert_eq!(find_tandem_repeat(&s, 3).unwrap(), Some(TandemRepeat { start: 6, size: 2 }));
        assert!(!is_conflict_free(&s, 3).unwrap());
        assert!(is_conflict_free(&dna("ACTGCATGCA"), 1).unwrap());
        assert!(!is_conflict_free(&dna("AAT"), 1).unwrap());
        assert!(is_conflict_free(&dna("AAT"), 2).is_err());
        assert!(is_conflict_free(&dna("ACGT"), 0).is_err());
    }

    #[test]
    fn ss_free_examples() {
        assert!(is_ss_free(&dna("AAAAAA")));
        assert!(!is_ss_free(&dna("ACGT")));
        assert!(is_ss_free(&dna("AC")));
        assert!(is_ss_free(&dna("ACCACAACCA")));
    }

    #[test]
    fn literal_reverse_check() {
        let words: Vec<Vector> = ["AT", "TA"].iter().map(|s| decode_dna(&dna(s)).unwrap()).collect();
        let r = constraint_audit(&words, 1, AuditMode::Explicit, None).unwrap();
        assert!(r.hd_ok);
        assert!(!r.r_ok);
        assert_eq!(r.r_ok_excluding_images, Some(true));
        assert!(r.reverse_closed);
        // AT and TA are their own reverse-complements
        assert_eq!(r.rc_fixed_points, 2);
        assert!(!r.rc_ok);
    }

    #[test]
    fn shortcut_needs_code() {
        assert_eq!(constraint_audit(&[], 1, AuditMode::LinearShortcut, None), Err(Error::MissingCode));
        let c = LinearCode::new(Field::F4, 2, vec![Vector::parse("11").unwrap()]).unwrap();
        let r = constraint_audit(&[], 2, AuditMode::LinearShortcut, Some(&c)).unwrap();
        assert!(r.hd_ok && r.r_ok && r.rc_ok);
        let many = vec![Vector::zeros(4); MAX_EXPLICIT_WORDS + 1];
        assert!(matches!(constraint_audit(&many, 1, AuditMode::Explicit, None), Err(Error::TooManyWords { .. })));
    }

    proptest! {
        #[test]
        fn conflict_free_is_monotone(s in "[ACGT]{4,24}", l in 2usize..12) {
            let d = dna(&s);
            prop_assume!(l <= d.len() / 2);
            if is_conflict_free(&d, l).unwrap() {
                prop_assert!(is_conflict_free(&d, l - 1).unwrap());
            }
        }

        #[test]
        fn level_one_means_no_homopolymer(s in "[ACGT]{2,24}") {
            let d = dna(&s);
            let homopolymer = d.as_bytes().windows(2).any(|w| w[0] == w[1]);
            prop_assert_eq!(is_conflict_free(&d, 1).unwrap(), !homopolymer);
        }

        #[test]
        fn ss_free_invariant_under_reverse_complement(s in "[ACGT]{0,24}") {
            let d = dna(&s);
            prop_assert_eq!(is_ss_free(&d), is_ss_free(&d.reverse_complement()));
        }

        #[test]
        fn two_letter_words_are_ss_free(s in "[AC]{0,24}") {
            prop_assert!(is_ss_free(&dna(&s)));
            prop_assert_eq!(encode_dna(&decode_dna(&dna(&s)).unwrap()), dna(&s));
        }
    }
}
