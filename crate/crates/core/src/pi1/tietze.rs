use std::collections::BTreeSet;

use super::{inverse_word, GroupPresentation, Letter, Word};

/// Eliminations that would push the total relator length past this are skipped.
const LENGTH_CAP: usize = 10_000;

fn free_reduce(word: &[Letter]) -> Word {
    let mut out: Word = Vec::with_capacity(word.len());
    for &l in word {
        if out.last() == Some(&l.inv()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

fn cyclic_reduce(word: &[Letter]) -> Word {
    let mut w = free_reduce(word);
    let mut start = 0;
    let mut end = w.len();
    while end - start >= 2 && w[start] == w[end - 1].inv() {
        start += 1;
        end -= 1;
    }
    w.truncate(end);
    w.drain(..start);
    w
}

/// Lexicographically least rotation of the word or of its inverse, so that
/// conjugate relators compare equal.
fn normalize(word: &[Letter]) -> Word {
    let w = cyclic_reduce(word);
    let inv = inverse_word(&w);
    let mut best = w.clone();
    for candidate in [&w, &inv] {
        for k in 0..candidate.len() {
            let rot: Word = candidate[k..]
                .iter()
                .chain(&candidate[..k])
                .copied()
                .collect();
            if rot < best {
                best = rot;
            }
        }
    }
    best
}

fn tidy(relators: impl IntoIterator<Item = Word>) -> Vec<Word> {
    let set: BTreeSet<Word> = relators
        .into_iter()
        .map(|r| normalize(&r))
        .filter(|r| !r.is_empty())
        .collect();
    set.into_iter().collect()
}

fn substitute(word: &[Letter], generator: usize, replacement: &[Letter]) -> Word {
    let inverse = inverse_word(replacement);
    let mut out = Vec::new();
    for &l in word {
        if l.generator != generator {
            out.push(l);
        } else if l.inverse {
            out.extend_from_slice(&inverse);
        } else {
            out.extend_from_slice(replacement);
        }
    }
    out
}

/// The expression of `generator` obtained from a relator containing it once.
fn solve(relator: &[Letter], generator: usize) -> Word {
    let at = relator
        .iter()
        .position(|l| l.generator == generator)
        .unwrap();
    // r = x^e W  with W read cyclically after x
    let w: Word = relator[at + 1..]
        .iter()
        .chain(&relator[..at])
        .copied()
        .collect();
    if relator[at].inverse {
        w
    } else {
        inverse_word(&w)
    }
}

/// Simplifies a presentation by free and cyclic reduction, removal of duplicate
/// relators, and elimination of generators that occur exactly once in some
/// relator. Generators are renumbered densely and all relators are returned
/// as cycle relators. Applying it again changes nothing.
pub fn tietze_simplify(pres: &GroupPresentation) -> GroupPresentation {
    let mut relators = tidy(pres.relators().cloned());
    let mut alive: BTreeSet<usize> = (0..pres.generator_count).collect();
    loop {
        let total: usize = relators.iter().map(Vec::len).sum();
        let mut best: Option<(usize, Vec<Word>)> = None;
        for (k, r) in relators.iter().enumerate() {
            let gens: BTreeSet<usize> = r.iter().map(|l| l.generator).collect();
            for &x in &gens {
                if r.iter().filter(|l| l.generator == x).count() != 1 {
                    continue;
                }
                let replacement = solve(r, x);
                let next = tidy(
                    relators
                        .iter()
                        .enumerate()
                        .filter(|&(m, _)| m != k)
                        .map(|(_, s)| substitute(s, x, &replacement)),
                );
                let len: usize = next.iter().map(Vec::len).sum();
                let better = best
                    .as_ref()
                    .is_none_or(|(_, b)| len < b.iter().map(Vec::len).sum());
                if len <= LENGTH_CAP.max(total) && better {
                    best = Some((x, next));
                }
            }
        }
        match best {
            Some((x, next)) => {
                alive.remove(&x);
                relators = next;
            }
            None => break,
        }
    }
    let index: Vec<usize> = alive.iter().copied().collect();
    let renumber = |g: usize| index.binary_search(&g).unwrap();
    let relators = tidy(relators.into_iter().map(|r| {
        r.into_iter()
            .map(|l| Letter {
                generator: renumber(l.generator),
                inverse: l.inverse,
            })
            .collect()
    }));
    GroupPresentation::new(alive.len(), relators)
}
