//! The engine: an append-only registry of species with cached orbit data.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, RwLock};

use crate::error::{Error, Result};
use crate::species::custom::{validate_custom, CustomSpeciesDoc};
use crate::species::{
    exponential, graphs, linear_orders, partitions, set_compositions, singleton_power,
    Bicomodule, CauchyProduct, OrbitTable, PairOrbitTable,
};

/// Registry of species plus caches of orbit tables. Species are immutable
/// once registered, so everything here is safe to share across workers.
pub struct Engine {
    species: RwLock<BTreeMap<String, Arc<dyn Bicomodule>>>,
    orbit_tables: Mutex<HashMap<(String, usize), Arc<OrbitTable>>>,
    pair_tables: Mutex<HashMap<(String, usize, usize), Arc<PairOrbitTable>>>,
}

impl Default for Engine {
    fn default() -> Self {
        Self::new()
    }
}

impl Engine {
    pub fn new() -> Self {
        let engine = Engine {
            species: RwLock::new(BTreeMap::new()),
            orbit_tables: Mutex::new(HashMap::new()),
            pair_tables: Mutex::new(HashMap::new()),
        };
        for sp in [
            exponential(),
            linear_orders(),
            partitions(),
            set_compositions(),
            graphs(),
            singleton_power(0),
            singleton_power(1),
        ] {
            engine.species.write().unwrap().insert(sp.id().to_string(), sp);
        }
        engine
    }

    pub fn species_ids(&self) -> Vec<String> {
        self.species.read().unwrap().keys().cloned().collect()
    }

    /// Resolves a species id. `A*B` denotes the Cauchy product, `S^k` the
    /// `k`-th singleton power, `1` the unit species.
    pub fn resolve(&self, id: &str) -> Result<Arc<dyn Bicomodule>> {
        if let Some(sp) = self.species.read().unwrap().get(id) {
            return Ok(sp.clone());
        }
        if id.contains('*') {
            let mut parts = id.split('*');
            let first = parts.next().unwrap().trim();
            let mut acc = self.resolve(first)?;
            for part in parts {
                let rhs = self.resolve(part.trim())?;
                acc = Arc::new(CauchyProduct::new(acc, rhs));
            }
            self.species.write().unwrap().entry(acc.id().to_string()).or_insert_with(|| acc.clone());
            return Ok(acc);
        }
        if let Some(k) = id.strip_prefix("S^") {
            if let Ok(k) = k.parse::<usize>() {
                let sp = singleton_power(k);
                self.species.write().unwrap().entry(sp.id().to_string()).or_insert_with(|| sp.clone());
                return Ok(sp);
            }
        }
        Err(Error::UnknownSpecies(id.to_string()))
    }

    /// Validates and registers a species document; returns its id.
    pub fn add_custom(&self, doc: &CustomSpeciesDoc) -> Result<String> {
        let species = validate_custom(doc)?;
        let id = species.id().to_string();
        let mut map = self.species.write().unwrap();
        if map.contains_key(&id) {
            return Err(Error::SpeciesDocument {
                path: "name".into(),
                message: format!("species `{}` is already registered", id),
            });
        }
        map.insert(id.clone(), Arc::new(species));
        Ok(id)
    }

    pub fn add_custom_json(&self, json: &str) -> Result<String> {
        let doc: CustomSpeciesDoc = serde_json::from_str(json)?;
        self.add_custom(&doc)
    }

    pub fn add_custom_file(&self, path: &std::path::Path) -> Result<String> {
        let json = std::fs::read_to_string(path)?;
        self.add_custom_json(&json)
    }

    pub fn orbit_table(&self, species: &Arc<dyn Bicomodule>, arity: usize) -> Result<Arc<OrbitTable>> {
        let key = (species.id().to_string(), arity);
        if let Some(t) = self.orbit_tables.lock().unwrap().get(&key) {
            return Ok(t.clone());
        }
        let table = Arc::new(OrbitTable::build(species.as_ref(), arity)?);
        self.orbit_tables.lock().unwrap().entry(key).or_insert_with(|| table.clone());
        Ok(table)
    }

    pub fn pair_table(
        &self,
        species: &Arc<dyn Bicomodule>,
        arity: usize,
        degree: usize,
    ) -> Result<Arc<PairOrbitTable>> {
        let key = (species.id().to_string(), arity, degree);
        if let Some(t) = self.pair_tables.lock().unwrap().get(&key) {
            return Ok(t.clone());
        }
        let table = Arc::new(PairOrbitTable::build(species.as_ref(), arity, degree)?);
        self.pair_tables.lock().unwrap().entry(key).or_insert_with(|| table.clone());
        Ok(table)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn built_ins_resolve() {
        let engine = Engine::new();
        for id in ["E", "L", "P", "C", "Gr", "S", "1"] {
            assert!(engine.resolve(id).is_ok(), "{}", id);
        }
        assert!(engine.resolve("S^3").is_ok());
        assert!(engine.resolve("nope").is_err());
    }

    #[test]
    fn products_resolve_and_cache() {
        let engine = Engine::new();
        let le = engine.resolve("L*E").unwrap();
        assert_eq!(le.id(), "L*E");
        let again = engine.resolve("L*E").unwrap();
        assert!(Arc::ptr_eq(&le, &again));
    }

    #[test]
    fn orbit_tables_are_cached() {
        let engine = Engine::new();
        let l = engine.resolve("L").unwrap();
        let a = engine.orbit_table(&l, 4).unwrap();
        let b = engine.orbit_table(&l, 4).unwrap();
        assert!(Arc::ptr_eq(&a, &b));
        assert_eq!(a.orbits.len(), 1);
        assert_eq!(a.total_structures(), 24);
    }
}
