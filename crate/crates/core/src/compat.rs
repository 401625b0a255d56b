//! Title-based compatibility: two own articles may merge when the Jaccard
//! overlap of their title word sets reaches a threshold `t`.
//!
//! Words are ASCII-lowercased maximal alphanumeric runs; no stemming, no
//! stop words. The comparison `|I| ≥ t·|U|` is done in exact rational
//! arithmetic.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::model::{ArticleId, CompatibilityGraph};

/// The word set of one article's title.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TitleTokens {
    pub article: ArticleId,
    pub tokens: BTreeSet<String>,
}

impl TitleTokens {
    pub fn new(article: ArticleId, title: &str) -> Self {
        TitleTokens {
            article,
            tokens: tokenize_title(title),
        }
    }
}

/// Lowercase, split on non-alphanumeric runs, deduplicate.
pub fn tokenize_title(title: &str) -> BTreeSet<String> {
    title
        .split(|c: char| !c.is_ascii_alphanumeric())
        .filter(|w| !w.is_empty())
        .map(|w| w.to_ascii_lowercase())
        .collect()
}

/// A rational threshold `num / den` in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Threshold {
    num: u64,
    den: u64,
}

impl Threshold {
    pub const ZERO: Threshold = Threshold { num: 0, den: 1 };
    pub const ONE: Threshold = Threshold { num: 1, den: 1 };

    pub fn new(num: u64, den: u64) -> Result<Self> {
        if den == 0 || num > den {
            return Err(Error::InvalidThreshold(format!("{num}/{den} is not in [0, 1]")));
        }
        let g = gcd(num, den);
        Ok(Threshold {
            num: num / g,
            den: den / g,
        })
    }

    /// `t = i / 10`, the spacing used by threshold sweeps.
    pub fn tenths(i: u64) -> Result<Self> {
        Threshold::new(i, 10)
    }

    pub fn as_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a.max(1)
    } else {
        gcd(b, a % b)
    }
}

impl FromStr for Threshold {
    type Err = Error;

    /// Accepts decimals (`0.35`, `1`, `.5`) and fractions (`1/3`).
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidThreshold(format!("cannot parse {s:?}"));
        let s = s.trim();
        if let Some((a, b)) = s.split_once('/') {
            let num = a.trim().parse().map_err(|_| bad())?;
            let den = b.trim().parse().map_err(|_| bad())?;
            return Threshold::new(num, den);
        }
        let (int, frac) = s.split_once('.').unwrap_or((s, ""));
        if (int.is_empty() && frac.is_empty())
            || !int.bytes().all(|b| b.is_ascii_digit())
            || !frac.bytes().all(|b| b.is_ascii_digit())
            || frac.len() > 18
        {
            return Err(bad());
        }
        let den = 10u64.pow(frac.len() as u32);
        let int: u64 = if int.is_empty() { 0 } else { int.parse().map_err(|_| bad())? };
        let frac: u64 = if frac.is_empty() { 0 } else { frac.parse().map_err(|_| bad())? };
        let num = int.checked_mul(den).and_then(|x| x.checked_add(frac)).ok_or_else(bad)?;
        Threshold::new(num, den)
    }
}

impl fmt::Display for Threshold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else if terminates(self.den) {
            write!(f, "{}", self.as_f64())
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// True when `1/den` has a finite decimal expansion.
fn terminates(mut den: u64) -> bool {
    for p in [2, 5] {
        while den % p == 0 {
            den /= p;
        }
    }
    den == 1
}

/// `|Tu ∩ Tv| ≥ t · |Tu ∪ Tv|`, exactly.
pub fn jaccard_compatible(tu: &BTreeSet<String>, tv: &BTreeSet<String>, t: Threshold) -> bool {
    let inter = tu.intersection(tv).count() as u128;
    let union = (tu.len() + tv.len()) as u128 - inter;
    inter * t.den as u128 >= t.num as u128 * union
}

/// Compatibility graph on `n` articles with edges among `own` only.
///
/// Every own article needs an entry in `titles`; entries for other
/// articles are ignored.
pub fn build_compat_graph(
    n: usize,
    own: &[ArticleId],
    titles: &[TitleTokens],
    t: Threshold,
) -> Result<CompatibilityGraph> {
    let by_id: HashMap<ArticleId, &BTreeSet<String>> = titles.iter().map(|tt| (tt.article, &tt.tokens)).collect();
    let sets: Vec<(ArticleId, &BTreeSet<String>)> = own
        .iter()
        .map(|&v| by_id.get(&v).map(|s| (v, *s)).ok_or(Error::MissingTitle(v)))
        .collect::<Result<_>>()?;
    let mut edges = Vec::new();
    for (i, &(a, ta)) in sets.iter().enumerate() {
        for &(b, tb) in &sets[i + 1..] {
            if jaccard_compatible(ta, tb, t) {
                if ta.is_empty() && tb.is_empty() {
                    log::warn!("articles {a} and {b} both have empty titles; treating them as compatible");
                }
                edges.push((a, b));
            }
        }
    }
    CompatibilityGraph::new(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::ids;

    fn set(words: &[&str]) -> BTreeSet<String> {
        words.iter().map(|w| w.to_string()).collect()
    }

    #[test]
    fn tokenizer() {
        assert_eq!(
            tokenize_title("H-Index Manipulation by Merging Articles"),
            set(&["h", "index", "manipulation", "by", "merging", "articles"])
        );
        assert!(tokenize_title("").is_empty());
        assert_eq!(tokenize_title("A a A"), set(&["a"]));
        assert_eq!(tokenize_title("  x--y__z  "), set(&["x", "y", "z"]));
    }

    #[test]
    fn thresholds() {
        assert_eq!("0.3".parse::<Threshold>().unwrap(), Threshold::new(3, 10).unwrap());
        assert_eq!(".5".parse::<Threshold>().unwrap(), Threshold::new(1, 2).unwrap());
        assert_eq!("1".parse::<Threshold>().unwrap(), Threshold::ONE);
        assert_eq!("2/6".parse::<Threshold>().unwrap(), Threshold::new(1, 3).unwrap());
        for bad in ["1.5", "-0.1", "", ".", "abc", "1/0"] {
            assert!(bad.parse::<Threshold>().is_err(), "{bad}");
        }
        assert_eq!(Threshold::new(3, 10).unwrap().to_string(), "0.3");
        assert_eq!(Threshold::new(1, 3).unwrap().to_string(), "1/3");
    }

    #[test]
    fn jaccard() {
        let a = set(&["x", "y"]);
        assert!(jaccard_compatible(&a, &a, Threshold::ONE));
        assert!(jaccard_compatible(&a, &set(&["q"]), Threshold::ZERO));
        let t = "0.3".parse().unwrap();
        assert!(!jaccard_compatible(&set(&["a", "b"]), &set(&["a", "c", "d"]), t));
        assert!(jaccard_compatible(&set(&[]), &set(&[]), Threshold::ONE));
    }

    #[test]
    fn graphs() {
        let same = [TitleTokens::new(ArticleId(0), "Graph"), TitleTokens::new(ArticleId(1), "graph")];
        let g = build_compat_graph(3, &ids(&[0, 1]), &same, "0.9".parse().unwrap()).unwrap();
        assert_eq!(g.edge_count(), 1);

        let titles: Vec<_> = (0..5).map(|i| TitleTokens::new(ArticleId(i), &format!("t{i}"))).collect();
        let own = ids(&[0, 1, 2, 3, 4]);
        assert_eq!(build_compat_graph(6, &own, &titles, Threshold::ZERO).unwrap().edge_count(), 10);
        assert_eq!(build_compat_graph(6, &own, &titles, "0.1".parse().unwrap()).unwrap().edge_count(), 0);
        assert_eq!(
            build_compat_graph(6, &ids(&[5]), &titles, Threshold::ZERO).unwrap_err(),
            Error::MissingTitle(ArticleId(5))
        );
    }
}
