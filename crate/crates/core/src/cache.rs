//! Advisory on-disk cache of root-system data, one versioned JSON document
//! per simple type. The directory comes from the `LEVELZERO_CACHE_DIR`
//! environment variable, defaulting to `$XDG_CACHE_HOME/levelzero` and then
//! `$HOME/.cache/levelzero`. A missing, stale or corrupt document simply
//! triggers recomputation; writes are best effort.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::root_systems::{build_root_system, CachedParts, RootSystem, SimpleType};

pub const CACHE_VERSION: u32 = 1;
pub const CACHE_DIR_ENV: &str = "LEVELZERO_CACHE_DIR";

/// Where (and whether) to cache root-system documents.
#[derive(Debug, Clone, Default)]
pub struct CacheConfig {
    dir: Option<PathBuf>,
}

impl CacheConfig {
    /// Resolve from the environment: `LEVELZERO_CACHE_DIR`, else the user
    /// cache directory, else disabled.
    pub fn from_env() -> Self {
        if let Ok(dir) = std::env::var(CACHE_DIR_ENV) {
            if !dir.is_empty() {
                return CacheConfig {
                    dir: Some(PathBuf::from(dir)),
                };
            }
        }
        if let Ok(xdg) = std::env::var("XDG_CACHE_HOME") {
            if !xdg.is_empty() {
                return CacheConfig {
                    dir: Some(Path::new(&xdg).join("levelzero")),
                };
            }
        }
        if let Ok(home) = std::env::var("HOME") {
            if !home.is_empty() {
                return CacheConfig {
                    dir: Some(Path::new(&home).join(".cache").join("levelzero")),
                };
            }
        }
        CacheConfig { dir: None }
    }

    pub fn disabled() -> Self {
        CacheConfig { dir: None }
    }

    pub fn with_dir(dir: impl Into<PathBuf>) -> Self {
        CacheConfig {
            dir: Some(dir.into()),
        }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    fn path_for(&self, st: SimpleType) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(format!("{st}.json")))
    }
}

/// The cached document. `involution` uses 1-based Bourbaki node numbers on
/// disk, matching the CLI wire formats.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RootSystemDoc {
    pub version: u32,
    #[serde(rename = "type")]
    pub simple_type: String,
    pub cartan: Vec<Vec<i64>>,
    pub positive_roots: Vec<Vec<i64>>,
    pub theta: Vec<i64>,
    pub theta_short: Vec<i64>,
    pub involution: Vec<usize>,
    pub gamma: GammaDoc,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GammaDoc {
    pub factors: Vec<u64>,
    pub projection: Vec<Vec<i64>>,
    pub reps: Vec<GammaRepDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GammaRepDoc {
    pub gamma: Vec<u64>,
    pub weight: Vec<i64>,
}

/// The document describing a built system; also the payload of the CLI
/// root-system summary.
pub fn document(rs: &RootSystem) -> RootSystemDoc {
    RootSystemDoc {
        version: CACHE_VERSION,
        simple_type: rs.simple_type().to_string(),
        cartan: rs.cartan().to_vec(),
        positive_roots: rs
            .positive_roots()
            .iter()
            .map(|r| r.integer_coords().expect("positive roots are integral"))
            .collect(),
        theta: rs.theta().integer_coords().expect("theta is integral"),
        theta_short: rs
            .theta_short()
            .integer_coords()
            .expect("theta_short is integral"),
        involution: rs.involution().iter().map(|&i| i + 1).collect(),
        gamma: GammaDoc {
            factors: rs.gamma().invariant_factors().to_vec(),
            projection: rs.gamma().projection().to_vec(),
            reps: rs
                .gamma()
                .minimal_reps()
                .iter()
                .map(|(g, w)| GammaRepDoc {
                    gamma: g.residues().to_vec(),
                    weight: w.coords().to_vec(),
                })
                .collect(),
        },
    }
}

fn system_from_doc(st: SimpleType, doc: RootSystemDoc) -> Option<RootSystem> {
    if doc.version != CACHE_VERSION || doc.simple_type != st.to_string() {
        return None;
    }
    let involution: Vec<usize> = doc
        .involution
        .iter()
        .map(|&i| i.checked_sub(1))
        .collect::<Option<_>>()?;
    RootSystem::from_cached_parts(CachedParts {
        simple_type: st,
        cartan: doc.cartan,
        positive_roots: doc.positive_roots,
        theta: doc.theta,
        theta_short: doc.theta_short,
        involution,
        factors: doc.gamma.factors,
        projection: doc.gamma.projection,
        reps: doc
            .gamma
            .reps
            .into_iter()
            .map(|r| (r.gamma, r.weight))
            .collect(),
    })
}

/// Loads the system from the cache when possible, otherwise builds it and
/// writes the document back (best effort).
pub fn load_or_build(st: SimpleType, config: &CacheConfig) -> RootSystem {
    let path = config.path_for(st);
    if let Some(path) = &path {
        if let Ok(text) = fs::read_to_string(path) {
            if let Ok(doc) = serde_json::from_str::<RootSystemDoc>(&text) {
                if let Some(rs) = system_from_doc(st, doc) {
                    return rs;
                }
            }
        }
    }
    let rs = build_root_system(st);
    if let Some(path) = &path {
        if let Some(parent) = path.parent() {
            let _ = fs::create_dir_all(parent);
        }
        if let Ok(text) = serde_json::to_string(&document(&rs)) {
            let _ = fs::write(path, text);
        }
    }
    rs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_systems::{Family, Weight};

    fn st(f: Family, r: usize) -> SimpleType {
        SimpleType::new(f, r).unwrap()
    }

    #[test]
    fn document_round_trips_through_from_parts() {
        for t in [st(Family::A, 2), st(Family::B, 3), st(Family::G, 2), st(Family::D, 4)] {
            let rs = build_root_system(t);
            let doc = document(&rs);
            let text = serde_json::to_string(&doc).unwrap();
            let parsed: RootSystemDoc = serde_json::from_str(&text).unwrap();
            let loaded = system_from_doc(t, parsed).expect("document must reload");
            assert_eq!(loaded.cartan(), rs.cartan());
            assert_eq!(loaded.involution(), rs.involution());
            assert_eq!(
                loaded.gamma().invariant_factors(),
                rs.gamma().invariant_factors()
            );
            assert_eq!(
                loaded.dominance_compare(&loaded.theta_weight(), &Weight::zero(t.rank())),
                rs.dominance_compare(&rs.theta_weight(), &Weight::zero(t.rank()))
            );
        }
    }

    #[test]
    fn corrupt_documents_are_rejected() {
        let rs = build_root_system(st(Family::A, 2));
        let mut doc = document(&rs);
        doc.version = 99;
        assert!(system_from_doc(st(Family::A, 2), doc.clone()).is_none());
        doc.version = CACHE_VERSION;
        doc.cartan[0][1] = -7;
        assert!(system_from_doc(st(Family::A, 2), doc).is_none());
    }

    #[test]
    fn load_or_build_writes_and_reads() {
        let dir = std::env::temp_dir().join(format!(
            "levelzero-cache-test-{}",
            std::process::id()
        ));
        let _ = fs::remove_dir_all(&dir);
        let config = CacheConfig::with_dir(&dir);
        let t = st(Family::A, 3);
        let first = load_or_build(t, &config);
        assert!(dir.join("A3.json").exists());
        let second = load_or_build(t, &config);
        assert_eq!(first.cartan(), second.cartan());
        assert_eq!(first.gamma().invariant_factors(), second.gamma().invariant_factors());
        // corrupting the file falls back to a rebuild
        fs::write(dir.join("A3.json"), "not json").unwrap();
        let third = load_or_build(t, &config);
        assert_eq!(first.cartan(), third.cartan());
        let _ = fs::remove_dir_all(&dir);
    }
}
