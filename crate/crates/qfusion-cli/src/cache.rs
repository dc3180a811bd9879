use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::compute::Entries;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Serialize, Deserialize)]
struct CacheFile {
    version: String,
    kind: String,
    method: String,
    n: usize,
    k: usize,
    entries: Vec<(String, String, String, i64, u64)>,
}

fn path(dir: &Path, kind: &str, method: &str, n: usize, k: usize) -> PathBuf {
    dir.join(format!("{kind}-{method}-n{n}-k{k}-v{VERSION}.json"))
}

/// Completed table for (kind, method, n, k) at this version, if cached.
pub fn load(dir: &Path, kind: &str, method: &str, n: usize, k: usize) -> Option<Entries> {
    let text = fs::read_to_string(path(dir, kind, method, n, k)).ok()?;
    let f: CacheFile = serde_json::from_str(&text).ok()?;
    if f.version != VERSION || f.kind != kind || f.n != n || f.k != k {
        return None;
    }
    f.entries
        .into_iter()
        .map(|(a, b, c, d, x)| Some(((a.parse().ok()?, b.parse().ok()?, c.parse().ok()?), (d, x))))
        .collect()
}

pub fn store(dir: &Path, kind: &str, method: &str, n: usize, k: usize, entries: &Entries) -> std::io::Result<()> {
    fs::create_dir_all(dir)?;
    let f = CacheFile {
        version: VERSION.to_string(),
        kind: kind.to_string(),
        method: method.to_string(),
        n,
        k,
        entries: entries
            .iter()
            .map(|((a, b, c), (d, x))| (a.to_string(), b.to_string(), c.to_string(), *d, *x))
            .collect(),
    };
    // write then rename so concurrent readers never see a partial file
    let target = path(dir, kind, method, n, k);
    let tmp = target.with_extension(format!("tmp{}", std::process::id()));
    fs::write(&tmp, serde_json::to_string(&f).expect("serializable"))?;
    fs::rename(tmp, target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use qfusion::partition::p;

    #[test]
    fn round_trip_and_misses() {
        let dir = std::env::temp_dir().join(format!("qfusion-cache-unit-{}", std::process::id()));
        let mut e = Entries::new();
        e.insert((p(&[2, 1]), p(&[2, 1]), p(&[])), (0, 1));
        e.insert((p(&[2, 1]), p(&[2, 1]), p(&[2, 1])), (1, 1));
        store(&dir, "fusion", "lattice", 3, 2, &e).unwrap();
        assert_eq!(load(&dir, "fusion", "lattice", 3, 2), Some(e));
        assert_eq!(load(&dir, "fusion", "lattice", 3, 1), None);
        assert_eq!(load(&dir, "gw", "lattice", 3, 2), None);
        fs::write(path(&dir, "gw", "lattice", 3, 2), "not json").unwrap();
        assert_eq!(load(&dir, "gw", "lattice", 3, 2), None);
        fs::remove_dir_all(&dir).unwrap();
    }
}
