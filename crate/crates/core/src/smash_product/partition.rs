//! Partition functions `q` with `p(n) = n - q(n)`.

use std::fmt;

use crate::error::{Error, Result};

/// How a partition function is chosen.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PartitionSpec {
    /// `q(0..=M)` given explicitly
    Table(Vec<usize>),
    /// `q(n) = ⌊n/2⌋`
    FloorHalf,
    /// in each period of `a + b` steps, `q` increases for the first `a` steps and `p` for the next `b`
    Interleave(usize, usize),
}

impl PartitionSpec {
    /// Parses `floor-half`, `interleave(a,b)` or a comma-separated table.
    pub fn parse(text: &str) -> Result<PartitionSpec> {
        let t = text.trim();
        if t == "floor-half" {
            return Ok(PartitionSpec::FloorHalf);
        }
        if let Some(inner) = t.strip_prefix("interleave(").and_then(|r| r.strip_suffix(')')) {
            let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
            if let [a, b] = parts.as_slice() {
                let a = a.parse().map_err(|_| Error::Precondition(format!("bad interleave step count {a:?}")))?;
                let b = b.parse().map_err(|_| Error::Precondition(format!("bad interleave step count {b:?}")))?;
                return Ok(PartitionSpec::Interleave(a, b));
            }
            return Err(Error::Precondition(format!("interleave needs two counts, got {inner:?}")));
        }
        let mut table = Vec::new();
        for (i, v) in t.split(',').enumerate() {
            let v = v.trim();
            table.push(v.parse().map_err(|_| Error::Partition { index: i, reason: format!("{v:?} is not a nonnegative integer") })?);
        }
        Ok(PartitionSpec::Table(table))
    }
}

impl fmt::Display for PartitionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionSpec::FloorHalf => f.write_str("floor-half"),
            PartitionSpec::Interleave(a, b) => write!(f, "interleave({a},{b})"),
            PartitionSpec::Table(t) => {
                let parts: Vec<String> = t.iter().map(ToString::to_string).collect();
                f.write_str(&parts.join(","))
            }
        }
    }
}

/// A validated table `q(0..=M)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionFunction {
    values: Vec<usize>,
    name: String,
}

/// Builds `q(0..=m)` from a preset or checks an explicit table (whose own length wins).
pub fn make_partition(spec: &PartitionSpec, m: usize) -> Result<PartitionFunction> {
    if m < 1 {
        return Err(Error::Precondition("a partition table needs M >= 1".into()));
    }
    let values = match spec {
        PartitionSpec::Table(t) => t.clone(),
        PartitionSpec::FloorHalf => (0..=m).map(|n| n / 2).collect(),
        PartitionSpec::Interleave(a, b) => {
            if *a == 0 || *b == 0 {
                return Err(Error::Precondition("interleave needs positive step counts".into()));
            }
            let mut q = vec![0];
            for n in 0..m {
                let step = usize::from(n % (a + b) < *a);
                q.push(q[n] + step);
            }
            q
        }
    };
    PartitionFunction::from_table(values, spec.to_string())
}

impl PartitionFunction {
    fn from_table(values: Vec<usize>, name: String) -> Result<Self> {
        if values.len() < 2 {
            return Err(Error::Partition { index: values.len(), reason: "table needs at least two entries".into() });
        }
        for (n, &q) in values.iter().enumerate() {
            if q > n {
                return Err(Error::Partition { index: n, reason: format!("q({n}) = {q} exceeds {n}") });
            }
            if n > 0 {
                let prev = values[n - 1];
                if q < prev {
                    return Err(Error::Partition { index: n, reason: "q decreases".into() });
                }
                if q - prev > 1 {
                    return Err(Error::Partition { index: n, reason: format!("q jumps by {}", q - prev) });
                }
            }
        }
        let last = values.len() - 1;
        if values[last] == 0 {
            return Err(Error::Partition { index: last, reason: "q never increases on the table".into() });
        }
        if values[last] == last {
            return Err(Error::Partition { index: last, reason: "p never increases on the table".into() });
        }
        Ok(PartitionFunction { values, name })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// The largest `n` with `q(n)` defined.
    pub fn max_index(&self) -> usize {
        self.values.len() - 1
    }

    pub fn q(&self, n: usize) -> usize {
        self.values[n]
    }

    pub fn p(&self, n: usize) -> usize {
        n - self.values[n]
    }

    /// `p` as a partition function in its own right, named after `self`.
    pub fn complement(&self) -> PartitionFunction {
        let values = (0..self.values.len()).map(|n| self.p(n)).collect();
        PartitionFunction { values, name: format!("complement of {}", self.name) }
    }

    /// The smallest `n >= at_least` with `q(n) >= a` and `p(n) >= b`.
    pub fn reach(&self, a: usize, b: usize, at_least: usize) -> Option<usize> {
        (at_least..self.values.len()).find(|&n| self.q(n) >= a && self.p(n) >= b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floor_half() {
        let q = make_partition(&PartitionSpec::FloorHalf, 4).unwrap();
        assert_eq!(q.values(), &[0, 0, 1, 1, 2]);
        assert_eq!(q.p(3), 2);
    }

    #[test]
    fn interleave() {
        let q = make_partition(&PartitionSpec::Interleave(1, 2), 6).unwrap();
        assert_eq!(q.values(), &[0, 1, 1, 1, 2, 2, 2]);
        let q = make_partition(&PartitionSpec::Interleave(2, 1), 6).unwrap();
        assert_eq!(q.values(), &[0, 1, 2, 2, 3, 4, 4]);
        assert!(make_partition(&PartitionSpec::Interleave(0, 1), 4).is_err());
    }

    #[test]
    fn rejections_name_an_index() {
        let identity = PartitionSpec::Table(vec![0, 1, 2, 3]);
        assert!(matches!(make_partition(&identity, 3), Err(Error::Partition { index: 3, .. })));
        let jump = PartitionSpec::Table(vec![0, 0, 2]);
        assert!(matches!(make_partition(&jump, 2), Err(Error::Partition { index: 2, .. })));
        let flat = PartitionSpec::Table(vec![0, 0, 0]);
        assert!(matches!(make_partition(&flat, 2), Err(Error::Partition { index: 2, .. })));
        let big = PartitionSpec::Table(vec![1, 1]);
        assert!(matches!(make_partition(&big, 1), Err(Error::Partition { index: 0, .. })));
    }

    #[test]
    fn parse_round_trip() {
        for text in ["floor-half", "interleave(2,1)", "0,0,1,1,2"] {
            assert_eq!(PartitionSpec::parse(text).unwrap().to_string(), text);
        }
        assert!(matches!(PartitionSpec::parse("0,x"), Err(Error::Partition { index: 1, .. })));
    }

    #[test]
    fn complement_and_reach() {
        let q = make_partition(&PartitionSpec::FloorHalf, 6).unwrap();
        assert_eq!(q.complement().values(), &[0, 1, 1, 2, 2, 3, 3]);
        assert_eq!(q.reach(1, 1, 0), Some(2));
        assert_eq!(q.reach(0, 0, 3), Some(3));
        assert_eq!(q.reach(9, 0, 0), None);
    }
}
