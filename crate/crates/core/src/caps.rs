//! Size limits for the exhaustive oracles.
//!
//! Defaults can be overridden per process through `DEFEKT_CAPS`, a comma
//! separated list of `name=value` pairs, e.g. `DEFEKT_CAPS=minor=16,td=14`.

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub mad_bruteforce: usize,
    pub top_grad: usize,
    pub minor_host: usize,
    pub minor_pattern: usize,
    pub tree_depth: usize,
    pub vertex_cover: usize,
    pub colour_k2: usize,
    pub colour_k3: usize,
    pub choosability: usize,
    pub gadget_vertices: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            mad_bruteforce: 16,
            top_grad: 20,
            minor_host: 14,
            minor_pattern: 8,
            tree_depth: 12,
            vertex_cover: 16,
            colour_k2: 18,
            colour_k3: 12,
            choosability: 8,
            gadget_vertices: 1 << 20,
        }
    }
}

impl Caps {
    pub const NAMES: [&'static str; 10] = [
        "mad", "topgrad", "minor", "minor-pattern", "td", "tau", "colour2", "colour3", "choose", "gadget",
    ];

    /// Sets one cap by name.
    pub fn set(&mut self, name: &str, value: usize) -> Result<()> {
        let slot = match name {
            "mad" => &mut self.mad_bruteforce,
            "topgrad" => &mut self.top_grad,
            "minor" => &mut self.minor_host,
            "minor-pattern" => &mut self.minor_pattern,
            "td" => &mut self.tree_depth,
            "tau" => &mut self.vertex_cover,
            "colour2" => &mut self.colour_k2,
            "colour3" => &mut self.colour_k3,
            "choose" => &mut self.choosability,
            "gadget" => &mut self.gadget_vertices,
            other => return Err(Error::InvalidInput(format!("unknown cap {other:?}"))),
        };
        *slot = value;
        Ok(())
    }

    /// Applies `name=value,...` overrides.
    pub fn apply(mut self, spec: &str) -> Result<Self> {
        for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (name, value) = item
                .split_once('=')
                .ok_or_else(|| Error::InvalidInput(format!("cap override {item:?} is not name=value")))?;
            let value = value
                .trim()
                .parse()
                .map_err(|_| Error::InvalidInput(format!("cap {name:?} needs an integer")))?;
            self.set(name.trim(), value)?;
        }
        Ok(self)
    }

    /// Defaults with `DEFEKT_CAPS` applied.
    pub fn from_env() -> Result<Self> {
        match std::env::var("DEFEKT_CAPS") {
            Ok(spec) => Caps::default().apply(&spec),
            Err(_) => Ok(Caps::default()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overrides() {
        let caps = Caps::default().apply("minor=16, td=14").unwrap();
        assert_eq!(caps.minor_host, 16);
        assert_eq!(caps.tree_depth, 14);
        assert_eq!(caps.top_grad, 20);
        assert!(Caps::default().apply("nope=1").is_err());
        assert!(Caps::default().apply("td").is_err());
        assert!(Caps::default().apply("td=x").is_err());
    }
}
