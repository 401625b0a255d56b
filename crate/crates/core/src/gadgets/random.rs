//! Seeded random instances and profiles. ChaCha8 keeps streams identical
//! across platforms for a fixed seed.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::compat::{build_compat_graph, Threshold, TitleTokens};
use crate::io::{ProfileArticle, ProfileRecord};
use crate::model::{ArticleId, CitationGraph, CompatibilityGraph, Instance};

/// How the compatibility graph of a random instance is drawn.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompatModel {
    /// All own articles pairwise compatible.
    Clique,
    Edgeless,
    /// Own articles split into random groups of at most `c`; each pair inside a group is an edge with probability ½.
    ComponentCap(usize),
    /// Synthetic titles, then the Jaccard rule at `threshold`.
    Titles { threshold: Threshold },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RandomSpec {
    pub seed: u64,
    pub n_own: usize,
    pub n_ext: usize,
    /// Probability of each arc `u → w` for every article `u` and own `w ≠ u`.
    pub arc_prob: f64,
    pub compat: CompatModel,
}

impl RandomSpec {
    pub fn new(seed: u64, n_own: usize, n_ext: usize, arc_prob: f64, compat: CompatModel) -> Self {
        RandomSpec {
            seed,
            n_own,
            n_ext,
            arc_prob,
            compat,
        }
    }
}

const TOPICS: [&[&str]; 4] = [
    &["graph", "kernel", "parameterized", "vertex", "cover"],
    &["citation", "index", "bibliometric", "manipulation", "scholar"],
    &["clique", "enumeration", "pivot", "maximal", "sparse"],
    &["merging", "articles", "profile", "measure", "author"],
];
const GLUE: [&str; 6] = ["on", "the", "of", "algorithms", "analysis", "complexity"];

/// A short title: three or four words from one topic plus one or two glue words.
pub fn synthetic_title(rng: &mut impl Rng) -> String {
    let topic = TOPICS[rng.gen_range(0..TOPICS.len())];
    let (a, b) = (rng.gen_range(3..=4), rng.gen_range(1..=2));
    let mut words: Vec<&str> = topic.choose_multiple(rng, a).copied().collect();
    words.extend(GLUE.choose_multiple(rng, b).copied());
    words.shuffle(rng);
    words.join(" ")
}

fn draw_arcs(rng: &mut ChaCha8Rng, spec: &RandomSpec) -> Vec<(usize, usize)> {
    let n = spec.n_own + spec.n_ext;
    let mut arcs = Vec::new();
    for u in 0..n {
        for w in 0..spec.n_own {
            if u != w && rng.gen_bool(spec.arc_prob.clamp(0.0, 1.0)) {
                arcs.push((u, w));
            }
        }
    }
    arcs
}

/// Own articles are `0..n_own`, external articles follow. Target 0, no budget.
pub fn random_instance(spec: &RandomSpec) -> Instance {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let n = spec.n_own + spec.n_ext;
    let arcs = draw_arcs(&mut rng, spec);
    let own: Vec<ArticleId> = (0..spec.n_own).map(ArticleId::from).collect();
    let g = match spec.compat {
        CompatModel::Clique => CompatibilityGraph::clique_on(n, &own),
        CompatModel::Edgeless => CompatibilityGraph::edgeless(n),
        CompatModel::ComponentCap(c) => {
            let mut order: Vec<usize> = (0..spec.n_own).collect();
            order.shuffle(&mut rng);
            let mut edges = Vec::new();
            let mut rest = &order[..];
            while !rest.is_empty() {
                let size = rng.gen_range(1..=c.max(1)).min(rest.len());
                let (group, tail) = rest.split_at(size);
                for (i, &a) in group.iter().enumerate() {
                    for &b in &group[i + 1..] {
                        if rng.gen_bool(0.5) {
                            edges.push((a, b));
                        }
                    }
                }
                rest = tail;
            }
            CompatibilityGraph::from_pairs(n, &edges).expect("distinct pairs")
        }
        CompatModel::Titles { threshold } => {
            let titles: Vec<TitleTokens> = own
                .iter()
                .map(|&v| TitleTokens::new(v, &synthetic_title(&mut rng)))
                .collect();
            build_compat_graph(n, &own, &titles, threshold).expect("every own article has a title")
        }
    };
    let d = CitationGraph::from_pairs(n, &arcs).expect("distinct arcs");
    Instance::new(d, g, own, 0, None).expect("well-formed")
}

/// A profile with synthetic titles for every article; keys sort in id order.
/// The compatibility model of `spec` is ignored.
pub fn random_profile(spec: &RandomSpec) -> ProfileRecord {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let n = spec.n_own + spec.n_ext;
    let arcs = draw_arcs(&mut rng, spec);
    let key = |i: usize| format!("a{i:05}");
    ProfileRecord {
        articles: (0..n)
            .map(|i| ProfileArticle {
                key: key(i),
                title: synthetic_title(&mut rng),
                own: i < spec.n_own,
            })
            .collect(),
        citations: arcs.into_iter().map(|(u, v)| (key(u), key(v))).collect(),
    }
}
