//! On-disk cache of Saito frames.
//!
//! Entries are keyed by the group string and the SHA-256 of the root system
//! descriptor, so a change in the descriptor never reuses a stale frame. A
//! loaded frame is re-verified before use; an entry that fails to parse or
//! verify is recomputed and overwritten.

use std::fs;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use crate::coxeter::RootSystem;
use crate::error::Result;
use crate::saito::{saito_frame, verify_saito, SaitoFrame};
use crate::serial::{frame_from_json, frame_to_json, root_system_to_json};

pub const CACHE_ENV: &str = "CHEREDNIK_CACHE";
const FORMAT: &str = "frame-v1";

#[derive(Debug, Clone)]
pub struct FrameCache {
    dir: PathBuf,
}

impl FrameCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        FrameCache { dir: dir.into() }
    }

    /// `$CHEREDNIK_CACHE`, or `./.cache`.
    pub fn from_env() -> Self {
        let dir = std::env::var_os(CACHE_ENV).map(PathBuf::from).unwrap_or_else(|| PathBuf::from(".cache"));
        FrameCache::new(dir)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn key(rs: &RootSystem) -> String {
        let mut h = Sha256::new();
        h.update(FORMAT.as_bytes());
        h.update(root_system_to_json(rs).to_string().as_bytes());
        format!("{}-{}", rs.spec(), &hex::encode(h.finalize())[..16])
    }

    pub fn path(&self, rs: &RootSystem) -> PathBuf {
        self.dir.join(format!("{}.json", Self::key(rs)))
    }

    fn load(&self, rs: &RootSystem) -> Option<SaitoFrame> {
        let text = fs::read_to_string(self.path(rs)).ok()?;
        let frame = frame_from_json(&serde_json::from_str(&text).ok()?).ok()?;
        (frame.group == rs.spec() && verify_saito(rs, &frame).ok()).then_some(frame)
    }

    /// The frame for `rs` and whether it came from disk.
    pub fn frame(&self, rs: &RootSystem) -> Result<(SaitoFrame, bool)> {
        if let Some(f) = self.load(rs) {
            return Ok((f, true));
        }
        let frame = saito_frame(rs)?;
        fs::create_dir_all(&self.dir)?;
        let tmp = self.dir.join(format!(".{}.tmp", Self::key(rs)));
        fs::write(&tmp, serde_json::to_string(&frame_to_json(&frame))?)?;
        fs::rename(&tmp, self.path(rs))?;
        Ok((frame, false))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{build_root_system, GroupType};

    #[test]
    fn hit_after_miss_and_recovers_from_garbage() {
        let dir = tempfile::tempdir().unwrap();
        let cache = FrameCache::new(dir.path());
        let b2 = build_root_system(GroupType::B, 2).unwrap();
        let (f1, hit) = cache.frame(&b2).unwrap();
        assert!(!hit);
        let (f2, hit) = cache.frame(&b2).unwrap();
        assert!(hit);
        assert_eq!(f1, f2);
        fs::write(cache.path(&b2), "{\"group\": \"B2\"}").unwrap();
        let (f3, hit) = cache.frame(&b2).unwrap();
        assert!(!hit);
        assert_eq!(f3, f1);
    }

    #[test]
    fn keys_differ_by_group() {
        let a = build_root_system(GroupType::A, 3).unwrap();
        let d = build_root_system(GroupType::D, 3).unwrap();
        assert_ne!(FrameCache::key(&a), FrameCache::key(&d));
        assert!(FrameCache::key(&a).starts_with("A3-"));
    }
}
