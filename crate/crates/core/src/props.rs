//! Process-wide conventions.
//!
//! The record is read by the loop action (word order), trajectory extraction
//! (crossing sign and coincidence tolerance) and rendering. Mutate it only
//! while no computation is running.

use std::fmt;
use std::str::FromStr;
use std::sync::RwLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Order in which the generators of a word are applied to a loop.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LoopActDir {
    /// First word entry acts first.
    #[serde(rename = "lr")]
    LeftToRight,
    /// Last word entry acts first.
    #[serde(rename = "rl")]
    RightToLeft,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PlotDir {
    #[serde(rename = "bt")]
    BottomTop,
    #[serde(rename = "tb")]
    TopBottom,
    #[serde(rename = "lr")]
    LeftRight,
    #[serde(rename = "rl")]
    RightLeft,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BasePointSide {
    #[serde(rename = "right")]
    Right,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Properties {
    pub gen_rot_dir: i32,
    pub gen_loop_act_dir: LoopActDir,
    pub gen_plot_over_under: bool,
    pub braid_abs_tol: f64,
    pub braid_plot_dir: PlotDir,
    pub loop_coords_base_point: BasePointSide,
}

impl Default for Properties {
    fn default() -> Self {
        Properties {
            gen_rot_dir: 1,
            gen_loop_act_dir: LoopActDir::LeftToRight,
            gen_plot_over_under: true,
            braid_abs_tol: 1e-10,
            braid_plot_dir: PlotDir::BottomTop,
            loop_coords_base_point: BasePointSide::Right,
        }
    }
}

/// Property names, in display order.
pub const KEYS: [&str; 6] = [
    "GenRotDir",
    "GenLoopActDir",
    "GenPlotOverUnder",
    "BraidAbsTol",
    "BraidPlotDir",
    "LoopCoordsBasePoint",
];

impl fmt::Display for LoopActDir {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LoopActDir::LeftToRight => "lr",
            LoopActDir::RightToLeft => "rl",
        })
    }
}

impl fmt::Display for PlotDir {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PlotDir::BottomTop => "bt",
            PlotDir::TopBottom => "tb",
            PlotDir::LeftRight => "lr",
            PlotDir::RightLeft => "rl",
        })
    }
}

impl FromStr for PlotDir {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "bt" => Ok(PlotDir::BottomTop),
            "tb" => Ok(PlotDir::TopBottom),
            "lr" => Ok(PlotDir::LeftRight),
            "rl" => Ok(PlotDir::RightLeft),
            _ => Err(format!("unknown plot direction '{s}'")),
        }
    }
}

fn canonical_key(key: &str) -> Option<&'static str> {
    let k = key.to_ascii_lowercase().replace('_', "");
    KEYS.iter().copied().find(|name| name.to_ascii_lowercase() == k)
}

impl Properties {
    /// Value of a property rendered as text, e.g. `BraidAbsTol` gives `1e-10`.
    pub fn get(&self, key: &str) -> Result<String> {
        let name = canonical_key(key).ok_or_else(|| Error::UnknownProperty(key.to_string()))?;
        Ok(match name {
            "GenRotDir" => self.gen_rot_dir.to_string(),
            "GenLoopActDir" => self.gen_loop_act_dir.to_string(),
            "GenPlotOverUnder" => (self.gen_plot_over_under as i32).to_string(),
            "BraidAbsTol" => format!("{:e}", self.braid_abs_tol),
            "BraidPlotDir" => self.braid_plot_dir.to_string(),
            _ => "right".to_string(),
        })
    }

    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let name = canonical_key(key).ok_or_else(|| Error::UnknownProperty(key.to_string()))?;
        let bad = || Error::BadPropertyValue {
            key: name.to_string(),
            value: value.to_string(),
        };
        let v = value.trim().trim_matches('\'');
        match name {
            "GenRotDir" => {
                self.gen_rot_dir = match v {
                    "1" | "+1" => 1,
                    "-1" => -1,
                    _ => return Err(bad()),
                }
            }
            "GenLoopActDir" => {
                self.gen_loop_act_dir = match v {
                    "lr" => LoopActDir::LeftToRight,
                    "rl" => LoopActDir::RightToLeft,
                    _ => return Err(bad()),
                }
            }
            "GenPlotOverUnder" => {
                self.gen_plot_over_under = match v {
                    "1" | "true" => true,
                    "0" | "false" => false,
                    _ => return Err(bad()),
                }
            }
            "BraidAbsTol" => {
                let tol: f64 = v.parse().map_err(|_| bad())?;
                if tol < 0.0 || !tol.is_finite() {
                    return Err(bad());
                }
                self.braid_abs_tol = tol;
            }
            "BraidPlotDir" => self.braid_plot_dir = v.parse().map_err(|_| bad())?,
            _ => {
                if v != "right" {
                    return Err(bad());
                }
            }
        }
        Ok(())
    }

    /// Applies `BRAIDKIT_<KEY>` environment overrides (key upper-cased,
    /// e.g. `BRAIDKIT_BRAIDABSTOL=1e-8`).
    pub fn apply_env(&mut self) -> Result<()> {
        for key in KEYS {
            let var = format!("BRAIDKIT_{}", key.to_ascii_uppercase());
            if let Ok(v) = std::env::var(&var) {
                self.set(key, &v)?;
            }
        }
        Ok(())
    }
}

static GLOBAL: RwLock<Option<Properties>> = RwLock::new(None);

/// Snapshot of the current global properties.
pub fn current() -> Properties {
    GLOBAL
        .read()
        .map(|g| g.clone().unwrap_or_default())
        .unwrap_or_default()
}

/// Replaces the global properties.
pub fn replace(p: Properties) {
    if let Ok(mut g) = GLOBAL.write() {
        *g = Some(p);
    }
}

pub fn set(key: &str, value: &str) -> Result<()> {
    let mut p = current();
    p.set(key, value)?;
    replace(p);
    Ok(())
}

pub fn reset() {
    replace(Properties::default());
}
