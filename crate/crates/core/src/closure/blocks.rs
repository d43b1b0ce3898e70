use serde::Serialize;

use crate::words::{FiniteWord, Letter};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Forward,
    Reversed,
}

/// `w = head · b_1 ⋯ b_r · tail` where `head` is a proper suffix of a
/// block, `tail` a proper prefix, and each `b_i` is block 0 or block 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub orientation: Orientation,
    pub head: FiniteWord,
    pub blocks: Vec<u8>,
    pub tail: FiniteWord,
}

fn is_proper_suffix(s: &[Letter], of: &[Letter]) -> bool {
    s.len() < of.len() && of.ends_with(s)
}

fn is_proper_prefix(s: &[Letter], of: &[Letter]) -> bool {
    s.len() < of.len() && of.starts_with(s)
}

/// Full blocks from `w[i..]` until a proper block prefix is left;
/// depth-first with block 0 tried first, failed positions memoized.
fn parse_blocks(w: &[Letter], blocks: [&[Letter]; 2]) -> Option<(Vec<u8>, usize)> {
    let mut dead = vec![false; w.len() + 1];
    let mut stack: Vec<(usize, u8)> = vec![(0, 0)];
    let mut chosen: Vec<u8> = Vec::new();
    while let Some(&(i, next)) = stack.last() {
        let rest = &w[i..];
        if next == 0 && blocks.iter().any(|b| is_proper_prefix(rest, b)) {
            return Some((chosen, i));
        }
        if next < 2 && !dead[i] {
            stack.last_mut().unwrap().1 += 1;
            let b = blocks[next as usize];
            let j = i + b.len();
            if rest.starts_with(b) && !dead[j] {
                chosen.push(next);
                stack.push((j, 0));
            }
            continue;
        }
        dead[i] = true;
        stack.pop();
        if !stack.is_empty() {
            chosen.pop();
        }
    }
    None
}

/// Parses `w` as blocks `σ(0), σ(1)` or as blocks of their reversals.
/// The shortest head wins, forward before reversed.
pub fn blocks_decompose(w: &[Letter], sigma0: &[Letter], sigma1: &[Letter]) -> Option<Decomposition> {
    if sigma0.is_empty() || sigma1.is_empty() {
        return None;
    }
    let r0: Vec<Letter> = sigma0.iter().rev().copied().collect();
    let r1: Vec<Letter> = sigma1.iter().rev().copied().collect();
    let orientations: [(Orientation, [&[Letter]; 2]); 2] = [
        (Orientation::Forward, [sigma0, sigma1]),
        (Orientation::Reversed, [&r0, &r1]),
    ];
    for (orientation, blocks) in orientations {
        let longest = sigma0.len().max(sigma1.len());
        for h in 0..longest.min(w.len() + 1) {
            let head = &w[..h];
            if h > 0 && !blocks.iter().any(|b| is_proper_suffix(head, b)) {
                continue;
            }
            if let Some((bs, end)) = parse_blocks(&w[h..], blocks) {
                return Some(Decomposition {
                    orientation,
                    head: head.into(),
                    blocks: bs,
                    tail: w[h + end..].into(),
                });
            }
        }
    }
    None
}
