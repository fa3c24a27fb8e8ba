use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};

/// A freely reduced word. Letter `i > 0` is the `i`-th generator, `-i` its
/// inverse.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord {
    letters: Vec<i32>,
}

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord::default()
    }

    pub fn generator(i: usize) -> Self {
        FreeWord {
            letters: vec![i as i32],
        }
    }

    /// Freely reduces an arbitrary letter sequence.
    pub fn new(letters: impl IntoIterator<Item = i32>) -> Self {
        let mut out: Vec<i32> = Vec::new();
        for l in letters {
            assert!(l != 0, "letter 0 is not a generator");
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        FreeWord { letters: out }
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Largest generator index used.
    pub fn max_generator(&self) -> usize {
        self.letters
            .iter()
            .map(|l| l.unsigned_abs() as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    pub fn mul(&self, other: &FreeWord) -> FreeWord {
        let mut k = 0;
        let (a, b) = (&self.letters, &other.letters);
        while k < a.len() && k < b.len() && a[a.len() - 1 - k] == -b[k] {
            k += 1;
        }
        let mut letters = a[..a.len() - k].to_vec();
        letters.extend_from_slice(&b[k..]);
        FreeWord { letters }
    }

    pub fn pow(&self, exp: i64) -> FreeWord {
        let base = if exp < 0 { self.inverse() } else { self.clone() };
        (0..exp.unsigned_abs()).fold(FreeWord::identity(), |acc, _| acc.mul(&base))
    }

    /// Image under the endomorphism sending generator `i` to `images[i-1]`.
    pub fn substitute(&self, images: &[FreeWord]) -> FreeWord {
        self.letters.iter().fold(FreeWord::identity(), |acc, &l| {
            let img = &images[l.unsigned_abs() as usize - 1];
            if l > 0 {
                acc.mul(img)
            } else {
                acc.mul(&img.inverse())
            }
        })
    }

    /// Renders the word with the given generator names, e.g. `a b^-1`.
    pub fn render(&self, names: &[String]) -> String {
        self.letters
            .iter()
            .map(|&l| {
                let name = &names[l.unsigned_abs() as usize - 1];
                if l > 0 {
                    name.clone()
                } else {
                    format!("{name}^-1")
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Parses whitespace-separated `name` / `name^-1` tokens.
    pub fn parse(text: &str, names: &[String]) -> Result<FreeWord> {
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            let (name, inverted) = match tok.strip_suffix("^-1") {
                Some(n) => (n, true),
                None => (tok, false),
            };
            let idx = names
                .iter()
                .position(|n| n == name)
                .ok_or_else(|| Error::StructureMismatch(format!("unknown generator `{name}`")))?;
            let l = idx as i32 + 1;
            letters.push(if inverted { -l } else { l });
        }
        Ok(FreeWord::new(letters))
    }
}

impl fmt::Debug for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "ε");
        }
        for &l in &self.letters {
            let c = (b'a' + (l.unsigned_abs() as u8 - 1) % 26) as char;
            if l > 0 {
                write!(f, "{c}")?;
            } else {
                write!(f, "{}", c.to_ascii_uppercase())?;
            }
        }
        Ok(())
    }
}

fn check_rank(rank: usize, w: &FreeWord) -> Result<()> {
    let g = w.max_generator();
    if g > rank {
        return Err(Error::RankMismatch {
            expected: rank,
            found: g,
        });
    }
    Ok(())
}

/// Product in the free group of the given rank.
pub fn free_mul(rank: usize, u: &FreeWord, v: &FreeWord) -> Result<FreeWord> {
    check_rank(rank, u)?;
    check_rank(rank, v)?;
    Ok(u.mul(v))
}

/// Exponent-sum vector.
pub fn abelianize(w: &FreeWord, rank: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); rank];
    for &l in w.letters() {
        let i = l.unsigned_abs() as usize - 1;
        if l > 0 {
            v[i] += 1;
        } else {
            v[i] -= 1;
        }
    }
    v
}

/// All reduced words of length at most `bound`, in length-lex order with
/// letters ordered `a₁ < a₁⁻¹ < a₂ < a₂⁻¹ < …`.
pub fn words_up_to(rank: usize, bound: usize) -> Vec<FreeWord> {
    let letters: Vec<i32> = (1..=rank as i32).flat_map(|i| [i, -i]).collect();
    let mut out = vec![FreeWord::identity()];
    let mut layer_start = 0;
    for _ in 0..bound {
        let layer_end = out.len();
        for k in layer_start..layer_end {
            for &l in &letters {
                if out[k].letters.last() == Some(&-l) {
                    continue;
                }
                let mut letters = out[k].letters.clone();
                letters.push(l);
                out.push(FreeWord { letters });
            }
        }
        layer_start = layer_end;
    }
    out
}
