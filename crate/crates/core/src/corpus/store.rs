//! Corpus slices on disk: one graph6 line per graph, one file per
//! `(order, minimum degree)`, in certificate order.

use super::{CorpusError, CorpusSlice, Result};
use crate::triangulation::{canonical_certificate, decode_graph6, encode_graph6};
use std::fs;
use std::path::{Path, PathBuf};

/// `mpg-n{n}-d{d}.g6` inside `dir`.
pub fn slice_path(dir: &Path, n: usize, min_degree: usize) -> PathBuf {
    dir.join(format!("mpg-n{n}-d{min_degree}.g6"))
}

fn io(path: &Path, e: std::io::Error) -> CorpusError {
    CorpusError::Io(format!("{}: {e}", path.display()))
}

/// Write `slice` to its file in `dir`, creating `dir` if needed. The file is
/// written under a temporary name and renamed, so a partial file never
/// carries the final name.
pub fn save_slice(slice: &CorpusSlice, dir: &Path) -> Result<PathBuf> {
    fs::create_dir_all(dir).map_err(|e| io(dir, e))?;
    let path = slice_path(dir, slice.n, slice.min_degree);
    let tmp = path.with_extension("g6.partial");
    let mut text = String::new();
    for g in &slice.graphs {
        text.push_str(&encode_graph6(g));
        text.push('\n');
    }
    fs::write(&tmp, text).map_err(|e| io(&tmp, e))?;
    fs::rename(&tmp, &path).map_err(|e| io(&path, e))?;
    Ok(path)
}

/// Read a slice written by [`save_slice`]. Embeddings are recomputed and
/// graphs re-sorted by certificate; every line must be a triangulation of
/// order `n` with minimum degree at least `min_degree`.
pub fn load_slice(dir: &Path, n: usize, min_degree: usize) -> Result<CorpusSlice> {
    let path = slice_path(dir, n, min_degree);
    let text = fs::read_to_string(&path).map_err(|e| io(&path, e))?;
    let mut rows = Vec::new();
    for (i, line) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
        let g = decode_graph6(line.trim()).map_err(|e| CorpusError::Io(format!("{}:{}: {e}", path.display(), i + 1)))?;
        if g.order() != n || g.min_degree() < min_degree {
            return Err(CorpusError::Io(format!("{}:{}: graph does not belong to this slice", path.display(), i + 1)));
        }
        rows.push((canonical_certificate(&g), g));
    }
    rows.sort_by(|a, b| a.0.cmp(&b.0));
    rows.dedup_by(|a, b| a.0 == b.0);
    let (certificates, graphs) = rows.into_iter().unzip();
    Ok(CorpusSlice { n, min_degree, certificates, graphs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::enumerate_mpg;

    #[test]
    fn round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let s = enumerate_mpg(9, 3).unwrap();
        let p = save_slice(&s, dir.path()).unwrap();
        assert!(p.ends_with("mpg-n9-d3.g6"));
        let t = load_slice(dir.path(), 9, 3).unwrap();
        assert_eq!(t.certificates, s.certificates);
        assert!(load_slice(dir.path(), 9, 4).is_err());
    }
}
