use std::collections::BTreeMap;
use std::fmt;

use super::TqftError;

/// Planar diagram of a knot.
///
/// Each crossing lists four edge labels counter-clockwise, starting from the
/// incoming under strand. Signs are recovered by tracing the knot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PDCode {
    crossings: Vec<[i64; 4]>,
    signs: Vec<i8>,
    labels: Vec<i64>,
}

/// Marked edge label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BasePoint(pub i64);

impl PDCode {
    pub fn new(crossings: Vec<[i64; 4]>) -> Result<Self, TqftError> {
        let mut count: BTreeMap<i64, usize> = BTreeMap::new();
        for x in &crossings {
            for l in x {
                *count.entry(*l).or_default() += 1;
            }
        }
        if let Some((l, n)) = count.iter().find(|(_, &n)| n != 2) {
            return Err(TqftError::Parse(format!("edge {l} occurs {n} times")));
        }
        let labels: Vec<i64> = count.into_keys().collect();
        let signs = trace_signs(&crossings, &labels)?;
        Ok(PDCode { crossings, signs, labels })
    }

    pub fn unknot() -> Self {
        PDCode { crossings: Vec::new(), signs: Vec::new(), labels: Vec::new() }
    }

    pub fn crossings(&self) -> &[[i64; 4]] {
        &self.crossings
    }

    pub fn len(&self) -> usize {
        self.crossings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.crossings.is_empty()
    }

    /// Sorted distinct edge labels.
    pub fn labels(&self) -> &[i64] {
        &self.labels
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn n_plus(&self) -> usize {
        self.signs.iter().filter(|&&s| s > 0).count()
    }

    pub fn n_minus(&self) -> usize {
        self.signs.iter().filter(|&&s| s < 0).count()
    }

    pub fn default_base_point(&self) -> BasePoint {
        BasePoint(self.labels.first().copied().unwrap_or(0))
    }

    pub fn check_base_point(&self, bp: BasePoint) -> Result<(), TqftError> {
        if self.is_empty() || self.labels.binary_search(&bp.0).is_ok() {
            Ok(())
        } else {
            Err(TqftError::BadBasePoint(bp.0))
        }
    }

    /// The same knot with every crossing switched.
    pub fn mirror(&self) -> PDCode {
        // Rotating the slots makes the old over strand the new under strand.
        let crossings: Vec<[i64; 4]> = self
            .crossings
            .iter()
            .zip(&self.signs)
            .map(|(x, &s)| if s > 0 { [x[3], x[0], x[1], x[2]] } else { [x[1], x[2], x[3], x[0]] })
            .collect();
        PDCode::new(crossings).expect("mirror of a valid diagram")
    }

    /// Text form `X[a,b,c,d] X[...]`, labels renumbered along the knot.
    pub fn canonical_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for PDCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.crossings.iter().map(|x| format!("X[{},{},{},{}]", x[0], x[1], x[2], x[3])).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Follows the knot from the first under-crossing; rejects links.
fn trace_signs(crossings: &[[i64; 4]], labels: &[i64]) -> Result<Vec<i8>, TqftError> {
    if crossings.is_empty() {
        return Ok(Vec::new());
    }
    let mut occ: BTreeMap<i64, Vec<(usize, usize)>> = BTreeMap::new();
    for (x, c) in crossings.iter().enumerate() {
        for (s, l) in c.iter().enumerate() {
            occ.entry(*l).or_default().push((x, s));
        }
    }
    let mut signs = vec![0i8; crossings.len()];
    let mut visited = 0usize;
    let start = (0usize, 2usize);
    let mut exit = start;
    loop {
        let label = crossings[exit.0][exit.1];
        visited += 1;
        if visited > labels.len() {
            return Err(TqftError::Parse("inconsistent orientation".into()));
        }
        let o = &occ[&label];
        let entry = if o[0] == exit { o[1] } else { o[0] };
        let next = match entry.1 {
            0 => 2,
            1 => 3,
            3 => 1,
            _ => {
                return Err(TqftError::Parse(format!(
                    "edge {label} enters crossing {} as outgoing under strand",
                    entry.0
                )))
            }
        };
        match entry.1 {
            1 => signs[entry.0] = -1,
            3 => signs[entry.0] = 1,
            _ => {}
        }
        exit = (entry.0, next);
        if exit == start {
            break;
        }
    }
    if visited < labels.len() {
        // Count components roughly: at least two.
        return Err(TqftError::MultiComponent(2));
    }
    if signs.contains(&0) {
        return Err(TqftError::Parse("crossing whose over strand was never traversed".into()));
    }
    Ok(signs)
}

/// Accepts `X[1,4,2,5] X[...]`, optionally wrapped in `PD[...]`, or JSON `[[1,4,2,5],...]`.
/// An empty list is the crossingless unknot.
pub fn parse_pd(text: &str) -> Result<PDCode, TqftError> {
    let t = text.trim();
    let crossings = if t.starts_with('[') {
        let v: Vec<Vec<i64>> = serde_json::from_str(t).map_err(|e| TqftError::Parse(e.to_string()))?;
        v.into_iter()
            .map(|c| <[i64; 4]>::try_from(c).map_err(|c| TqftError::Parse(format!("crossing {c:?} needs 4 labels"))))
            .collect::<Result<Vec<_>, _>>()?
    } else {
        let mut body = t;
        if let Some(rest) = body.strip_prefix("PD[") {
            body = rest.strip_suffix(']').ok_or_else(|| TqftError::Parse("unclosed PD[".into()))?;
        }
        let mut out = Vec::new();
        let mut rest = body.trim_start_matches([' ', ',', '\n', '\t']);
        while !rest.is_empty() {
            let inner = rest.strip_prefix("X[").ok_or_else(|| {
                TqftError::Parse(format!("expected X[ at {:?}", rest.chars().take(12).collect::<String>()))
            })?;
            let close = inner.find(']').ok_or_else(|| TqftError::Parse("unclosed X[".into()))?;
            let nums: Vec<i64> = inner[..close]
                .split(',')
                .map(|s| s.trim().parse::<i64>().map_err(|e| TqftError::Parse(format!("{s:?}: {e}"))))
                .collect::<Result<_, _>>()?;
            let c: [i64; 4] = nums.try_into().map_err(|_| TqftError::Parse("crossing needs 4 labels".into()))?;
            out.push(c);
            rest = inner[close + 1..].trim_start_matches([' ', ',', '\n', '\t']);
        }
        out
    };
    PDCode::new(crossings)
}

/// Closure of a braid word; `k` is the generator sigma_k, negative for its inverse.
/// Accepts JSON `[1,-2,1]` or whitespace/comma separated integers.
pub fn parse_braid(text: &str) -> Result<PDCode, TqftError> {
    let t = text.trim().trim_start_matches('[').trim_end_matches(']');
    let word: Vec<i64> = t
        .split([',', ' ', '\t', '\n'])
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<i64>().map_err(|e| TqftError::Parse(format!("{s:?}: {e}"))))
        .collect::<Result<_, _>>()?;
    braid_pd(&word)
}

pub fn braid_pd(word: &[i64]) -> Result<PDCode, TqftError> {
    if word.contains(&0) {
        return Err(TqftError::Parse("braid generator 0".into()));
    }
    if word.is_empty() {
        return Ok(PDCode::unknot());
    }
    let strands = word.iter().map(|s| s.unsigned_abs() as usize).max().unwrap() + 1;
    let mut next = 0i64;
    let mut fresh = || {
        next += 1;
        next
    };
    let bottom: Vec<i64> = (0..strands).map(|_| fresh()).collect();
    let mut cur = bottom.clone();
    let mut raw = Vec::new();
    for &s in word {
        let i = s.unsigned_abs() as usize - 1;
        let (sw, se) = (cur[i], cur[i + 1]);
        let (nw, ne) = (fresh(), fresh());
        // Strands run upward; positive means the over strand runs SW -> NE.
        raw.push(if s > 0 { [se, ne, nw, sw] } else { [sw, se, ne, nw] });
        cur[i] = nw;
        cur[i + 1] = ne;
    }
    // Close: the top label of each position is identified with its bottom label.
    let mut rename: BTreeMap<i64, i64> = BTreeMap::new();
    for (b, t) in bottom.iter().zip(&cur) {
        if b == t {
            return Err(TqftError::MultiComponent(2));
        }
        rename.insert(*t, *b);
    }
    let raw: Vec<[i64; 4]> = raw.into_iter().map(|c| c.map(|l| *rename.get(&l).unwrap_or(&l))).collect();
    let pd = PDCode::new(raw)?;
    Ok(relabel_along_knot(&pd))
}

/// Renumbers edges 1..2n in the order they are traversed.
pub fn relabel_along_knot(pd: &PDCode) -> PDCode {
    if pd.is_empty() {
        return pd.clone();
    }
    let cs = &pd.crossings;
    let mut occ: BTreeMap<i64, Vec<(usize, usize)>> = BTreeMap::new();
    for (x, c) in cs.iter().enumerate() {
        for (s, l) in c.iter().enumerate() {
            occ.entry(*l).or_default().push((x, s));
        }
    }
    let mut new: BTreeMap<i64, i64> = BTreeMap::new();
    let start = (0usize, 2usize);
    let mut exit = start;
    loop {
        let label = cs[exit.0][exit.1];
        let n = new.len() as i64 + 1;
        new.entry(label).or_insert(n);
        let o = &occ[&label];
        let entry = if o[0] == exit { o[1] } else { o[0] };
        exit = (entry.0, [2, 3, 0, 1][entry.1]);
        if exit == start {
            break;
        }
    }
    PDCode::new(cs.iter().map(|c| c.map(|l| new[&l])).collect()).expect("relabelling keeps validity")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trefoils() {
        let left = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]").unwrap();
        assert_eq!((left.n_plus(), left.n_minus()), (0, 3));
        let right = parse_braid("[1,1,1]").unwrap();
        assert_eq!((right.n_plus(), right.n_minus()), (3, 0));
        assert_eq!(right.labels(), &[1, 2, 3, 4, 5, 6]);
        assert_eq!(left.mirror().n_plus(), 3);
        let again = parse_pd("PD[X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]]").unwrap();
        assert_eq!(again, left);
        let json = parse_pd("[[1,4,2,5],[3,6,4,1],[5,2,6,3]]").unwrap();
        assert_eq!(json, left);
    }

    #[test]
    fn kinks_and_unknots() {
        let u = parse_pd("").unwrap();
        assert!(u.is_empty());
        assert!(parse_pd("[]").unwrap().is_empty());
        let p = parse_pd("[[0,0,1,1]]").unwrap();
        assert_eq!(p.signs(), &[1]);
        let n = parse_pd("[[0,1,1,0]]").unwrap();
        assert_eq!(n.signs(), &[-1]);
    }

    #[test]
    fn rejects() {
        assert!(matches!(parse_braid("[1,1]"), Err(TqftError::MultiComponent(_))));
        assert!(matches!(parse_braid("[1,1,1,3]"), Err(TqftError::MultiComponent(_))));
        assert!(matches!(parse_pd("X[1,2,3]"), Err(TqftError::Parse(_))));
        assert!(matches!(parse_pd("X[1,1,2,3]"), Err(TqftError::Parse(_))));
        // Hopf link.
        assert!(matches!(parse_pd("X[4,1,3,2] X[2,3,1,4]"), Err(TqftError::MultiComponent(_))));
    }

    #[test]
    fn t34_braid() {
        let pd = parse_braid("[1,2,1,2,1,2,1,2]").unwrap();
        assert_eq!(pd.len(), 8);
        assert_eq!(pd.n_plus(), 8);
        for l in pd.labels() {
            let c = pd.crossings().iter().flatten().filter(|x| *x == l).count();
            assert_eq!(c, 2);
        }
    }
}
