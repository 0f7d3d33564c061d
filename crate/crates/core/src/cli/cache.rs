use std::fs;
use std::path::PathBuf;
use std::sync::atomic::{AtomicU64, Ordering};

use sha2::{Digest, Sha256};

use crate::derived::{SeriesLimits, StageCache};
use crate::fpgroup::GroupPresentation;

/// Stage cache backed by a directory of JSON files, one per parent stage,
/// named by a SHA-256 of the parent presentation and the limits.
pub struct DirCache {
    dir: PathBuf,
}

impl DirCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        DirCache { dir: dir.into() }
    }

    /// Cache configured by `ADORN_CACHE_DIR`, if set.
    pub fn from_env() -> Option<Self> {
        std::env::var_os("ADORN_CACHE_DIR").filter(|v| !v.is_empty()).map(Self::new)
    }

    pub fn key(parent: &GroupPresentation, lim: &SeriesLimits) -> String {
        let mut h = Sha256::new();
        h.update(parent.to_string().as_bytes());
        h.update([0]);
        h.update(serde_json::to_vec(lim).expect("limits serialize"));
        hex::encode(h.finalize())
    }

    fn path(&self, parent: &GroupPresentation, lim: &SeriesLimits) -> PathBuf {
        self.dir.join(format!("{}.json", Self::key(parent, lim)))
    }
}

impl StageCache for DirCache {
    fn load(&self, parent: &GroupPresentation, lim: &SeriesLimits) -> Option<GroupPresentation> {
        let text = fs::read_to_string(self.path(parent, lim)).ok()?;
        serde_json::from_str(&text).ok()
    }

    /// Best effort: an unwritable cache only costs recomputation.
    fn store(&self, parent: &GroupPresentation, lim: &SeriesLimits, child: &GroupPresentation) {
        if fs::create_dir_all(&self.dir).is_err() {
            return;
        }
        if let Ok(json) = serde_json::to_string(child) {
            let path = self.path(parent, lim);
            static COUNTER: AtomicU64 = AtomicU64::new(0);
            let n = COUNTER.fetch_add(1, Ordering::Relaxed);
            let tmp = path.with_extension(format!("{}.{n}.tmp", std::process::id()));
            if fs::write(&tmp, json).is_ok() {
                let _ = fs::rename(tmp, path);
            }
        }
    }
}
