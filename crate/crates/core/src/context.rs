//! A root system bundled with memoized weight systems and explicit modules.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use parking_lot::{Mutex, RwLock};

use crate::error::Result;
use crate::repbuilder::{self, ChevalleyBasis, ExplicitModule, ModuleSkeleton};
use crate::rootsystem::{LieType, RootSystem, Weight};
use crate::tensor::{self, Decomposition};
use crate::weights::{self, WeightSystem};

/// Persistent backing store for computed data, e.g. an on-disk cache.
///
/// Implementations must return exactly what was saved; entries they cannot
/// decode should be reported as missing.
pub trait ResultStore: Send + Sync {
    fn load_weight_system(&self, t: LieType, lambda: &Weight) -> Option<WeightSystem>;
    fn save_weight_system(&self, t: LieType, lambda: &Weight, ws: &WeightSystem);
    fn load_module(&self, t: LieType, lambda: &Weight) -> Option<ModuleSkeleton>;
    fn save_module(&self, t: LieType, lambda: &Weight, module: &ModuleSkeleton);
}

pub struct LieContext {
    rs: RootSystem,
    weight_systems: RwLock<HashMap<Weight, Arc<WeightSystem>>>,
    modules: Mutex<HashMap<Weight, Arc<ExplicitModule>>>,
    chevalley: OnceLock<Arc<ChevalleyBasis>>,
    store: Option<Arc<dyn ResultStore>>,
    module_cap: u64,
}

impl std::fmt::Debug for LieContext {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("LieContext").field("type", &self.rs.lie_type()).finish_non_exhaustive()
    }
}

impl LieContext {
    pub fn new(t: LieType) -> Result<Self> {
        Ok(Self::from_root_system(RootSystem::build(t)?))
    }

    pub fn from_root_system(rs: RootSystem) -> Self {
        LieContext {
            rs,
            weight_systems: RwLock::new(HashMap::new()),
            modules: Mutex::new(HashMap::new()),
            chevalley: OnceLock::new(),
            store: None,
            module_cap: repbuilder::DEFAULT_DIMENSION_CAP,
        }
    }

    pub fn with_store(mut self, store: Arc<dyn ResultStore>) -> Self {
        self.store = Some(store);
        self
    }

    pub fn with_module_cap(mut self, cap: u64) -> Self {
        self.module_cap = cap;
        self
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn lie_type(&self) -> LieType {
        self.rs.lie_type()
    }

    pub fn weight_system(&self, lambda: &Weight) -> Result<Arc<WeightSystem>> {
        if let Some(ws) = self.weight_systems.read().get(lambda) {
            return Ok(ws.clone());
        }
        let loaded = self
            .store
            .as_ref()
            .and_then(|s| s.load_weight_system(self.lie_type(), lambda))
            .filter(|ws| ws.highest_weight() == lambda);
        let ws = match loaded {
            Some(ws) => ws,
            None => {
                let ws = weights::weight_system(&self.rs, lambda)?;
                if let Some(store) = &self.store {
                    store.save_weight_system(self.lie_type(), lambda, &ws);
                }
                ws
            }
        };
        let ws = Arc::new(ws);
        self.weight_systems.write().insert(lambda.clone(), ws.clone());
        Ok(ws)
    }

    pub fn dim(&self, lambda: &Weight) -> Result<u64> {
        weights::dim(&self.rs, lambda)
    }

    pub fn multiplicity(&self, lambda: &Weight, mu: &Weight) -> Result<u64> {
        Ok(self.weight_system(lambda)?.mult(&self.rs, mu))
    }

    pub fn decompose(&self, lambda: &Weight, mu: &Weight) -> Result<Decomposition> {
        for w in [lambda, mu] {
            if !w.is_dominant() {
                return Err(crate::Error::NotDominant(w.to_string()));
            }
        }
        let (small, big) = if self.dim(lambda)? <= self.dim(mu)? { (lambda, mu) } else { (mu, lambda) };
        let ws = self.weight_system(small)?;
        let components = tensor::klimyk(&self.rs, &ws, big)?;
        Ok(Decomposition { factors: (lambda.clone(), mu.clone()), components })
    }

    pub fn hom_dim(&self, lambda: &Weight, mu: &Weight, nu: &Weight) -> Result<u64> {
        if !nu.is_dominant() {
            return Ok(0);
        }
        Ok(self.decompose(lambda, mu)?.multiplicity(nu))
    }

    pub fn chevalley_basis(&self) -> Result<Arc<ChevalleyBasis>> {
        if let Some(cb) = self.chevalley.get() {
            return Ok(cb.clone());
        }
        let adjoint = self.module(&self.rs.highest_root().weight.clone())?;
        let cb = Arc::new(repbuilder::chevalley_basis_from_adjoint(&self.rs, &adjoint)?);
        Ok(self.chevalley.get_or_init(|| cb).clone())
    }

    /// The explicit irreducible module `L(λ)`, built once per context.
    pub fn module(&self, lambda: &Weight) -> Result<Arc<ExplicitModule>> {
        if let Some(m) = self.modules.lock().get(lambda) {
            return Ok(m.clone());
        }
        let loaded = self
            .store
            .as_ref()
            .and_then(|s| s.load_module(self.lie_type(), lambda))
            .and_then(|sk| ExplicitModule::from_skeleton(&self.rs, sk).ok())
            .filter(|m| m.highest_weight() == lambda);
        let module = match loaded {
            Some(m) => m,
            None => {
                let ws = self.weight_system(lambda)?;
                let m = repbuilder::build_module_with(&self.rs, &ws, self.module_cap)?;
                if let Some(store) = &self.store {
                    store.save_module(self.lie_type(), lambda, &m.skeleton());
                }
                m
            }
        };
        let module = Arc::new(module);
        self.modules.lock().insert(lambda.clone(), module.clone());
        Ok(module)
    }
}
