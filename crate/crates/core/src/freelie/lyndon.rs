use super::{Expr, FreeLieError, GradedVar, Multidegree};

/// Strictly smaller than each of its proper suffixes (equivalently, rotations).
pub fn is_lyndon(w: &[GradedVar]) -> bool {
    !w.is_empty() && (1..w.len()).all(|i| w < &w[i..])
}

/// `w = uv` with `v` the longest proper Lyndon suffix; `None` for letters.
pub fn standard_factorization(w: &[GradedVar]) -> Option<(&[GradedVar], &[GradedVar])> {
    (1..w.len())
        .find(|&i| is_lyndon(&w[i..]))
        .map(|i| (&w[..i], &w[i..]))
}

pub fn standard_bracketing(w: &[GradedVar]) -> Expr {
    match standard_factorization(w) {
        None => Expr::Var(w[0]),
        Some((u, v)) => Expr::bracket(standard_bracketing(u), standard_bracketing(v)),
    }
}

/// Lyndon words with the letter content `d`, in lexicographic order.
pub fn lyndon_basis(d: &Multidegree, cap: u32) -> Result<Vec<Vec<GradedVar>>, FreeLieError> {
    let total = d.total();
    if total > cap {
        return Err(FreeLieError::CapExceeded { degree: total, cap });
    }
    let letters: Vec<GradedVar> = d.vars().collect();
    let mut remaining: Vec<u32> = d.entries().iter().map(|&(_, e)| e).collect();
    let mut out = Vec::new();
    let mut word = Vec::with_capacity(total as usize);
    permutations(&letters, &mut remaining, &mut word, total as usize, &mut out);
    Ok(out)
}

/// Multiset permutations in lexicographic order, keeping the Lyndon ones.
fn permutations(
    letters: &[GradedVar],
    remaining: &mut [u32],
    word: &mut Vec<GradedVar>,
    total: usize,
    out: &mut Vec<Vec<GradedVar>>,
) {
    if word.len() == total {
        if is_lyndon(word) {
            out.push(word.clone());
        }
        return;
    }
    for i in 0..letters.len() {
        if remaining[i] == 0 {
            continue;
        }
        // a Lyndon word starts with its least letter
        if word.is_empty() && i > 0 {
            break;
        }
        remaining[i] -= 1;
        word.push(letters[i]);
        permutations(letters, remaining, word, total, out);
        word.pop();
        remaining[i] += 1;
    }
}

fn mobius(mut n: u32) -> i128 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

fn factorial(n: u32) -> i128 {
    (1..=n as i128).product()
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `(1/N) Σ_{e | gcd} μ(e) (N/e)! / Π (nᵢ/e)!`, the dimension of the cell.
pub fn witt_dimension(d: &Multidegree, cap: u32) -> Result<u64, FreeLieError> {
    let n = d.total();
    if n > cap {
        return Err(FreeLieError::CapExceeded { degree: n, cap });
    }
    if n == 0 {
        return Ok(0);
    }
    let g = d.entries().iter().fold(0, |acc, &(_, e)| gcd(acc, e));
    let mut sum: i128 = 0;
    for e in (1..=g).filter(|e| g % e == 0) {
        let mut term = factorial(n / e);
        for &(_, k) in d.entries() {
            term /= factorial(k / e);
        }
        sum += mobius(e) * term;
    }
    Ok((sum / n as i128) as u64)
}
