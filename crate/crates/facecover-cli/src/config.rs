//! Run configuration shared by the commands.

use facecover::kernelize::KernelConfig;
use facecover::oracle::{OracleConfig, ROTATION_BUDGET, SPR_BUDGET};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    /// Rotation systems the exact oracle may enumerate.
    pub rotation_budget: u128,
    /// SPR embedding choices the exact oracle may enumerate.
    pub spr_budget: u128,
    /// Smallness constant: reported against internal faces / |V|^(1/3).
    pub c: f64,
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            rotation_budget: ROTATION_BUDGET,
            spr_budget: SPR_BUDGET,
            c: 3.0,
            seed: 0,
        }
    }
}

impl RunConfig {
    pub fn oracle(&self) -> OracleConfig {
        OracleConfig {
            rotation_budget: self.rotation_budget.max(1),
            spr_budget: self.spr_budget.max(1),
        }
    }

    pub fn kernel(&self) -> KernelConfig {
        KernelConfig {
            oracle: self.oracle(),
            record_steps: false,
        }
    }
}
