//! Procedural urban scenes: extruded-box buildings on a flat square
//! region, the uniform receiver grid, and rasterization into the
//! network-input image.

use crate::error::{Error, Result};
use crate::rng::rng_from;
use rand::Rng;
use serde::{Deserialize, Serialize};

/// Axis-aligned building footprint extruded to `height` meters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Building {
    pub x_min: f64,
    pub y_min: f64,
    pub x_max: f64,
    pub y_max: f64,
    pub height: f64,
}

impl Building {
    pub fn validate(&self) -> Result<()> {
        if !(self.x_min < self.x_max && self.y_min < self.y_max) {
            return Err(Error::Config(format!(
                "degenerate footprint [{}, {}] x [{}, {}]",
                self.x_min, self.x_max, self.y_min, self.y_max
            )));
        }
        if !(self.height > 0.0) {
            return Err(Error::Config(format!("non-positive height {}", self.height)));
        }
        Ok(())
    }

    pub fn footprint_area(&self) -> f64 {
        (self.x_max - self.x_min) * (self.y_max - self.y_min)
    }

    /// Closed-interval point-in-footprint test.
    pub fn contains_xy(&self, x: f64, y: f64) -> bool {
        x >= self.x_min && x <= self.x_max && y >= self.y_min && y <= self.y_max
    }

    fn overlaps(&self, other: &Building) -> bool {
        self.x_min < other.x_max
            && other.x_min < self.x_max
            && self.y_min < other.y_max
            && other.y_min < self.y_max
    }
}

/// Square region of side `extent` meters with non-overlapping buildings.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Scene {
    pub extent: f64,
    pub seed: u64,
    pub buildings: Vec<Building>,
}

impl Scene {
    /// Default region side in meters.
    pub const DEFAULT_EXTENT: f64 = 1800.0;

    pub fn empty(extent: f64, seed: u64) -> Self {
        Scene { extent, seed, buildings: Vec::new() }
    }

    /// Check every invariant: buildings valid, inside [0, extent]^2,
    /// and pairwise non-overlapping. Quadratic; meant for tests and
    /// deserialization, not hot paths.
    pub fn validate(&self) -> Result<()> {
        if !(self.extent > 0.0) {
            return Err(Error::Config(format!("non-positive extent {}", self.extent)));
        }
        for (i, b) in self.buildings.iter().enumerate() {
            b.validate()?;
            if b.x_min < 0.0 || b.y_min < 0.0 || b.x_max > self.extent || b.y_max > self.extent {
                return Err(Error::Config(format!("building {i} outside region")));
            }
        }
        for i in 0..self.buildings.len() {
            for j in (i + 1)..self.buildings.len() {
                if self.buildings[i].overlaps(&self.buildings[j]) {
                    return Err(Error::Config(format!("buildings {i} and {j} overlap")));
                }
            }
        }
        Ok(())
    }

    pub fn max_height(&self) -> f64 {
        self.buildings.iter().fold(0.0, |acc, b| acc.max(b.height))
    }

    /// JSON document `{extent, seed, buildings: [...]}`; floats use the
    /// shortest decimal that round-trips.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("scene serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let scene: Scene = serde_json::from_str(text)?;
        scene.validate()?;
        Ok(scene)
    }
}

/// Region-level building statistics: built-up area ratio, buildings per
/// km^2, and the Rayleigh scale of building heights.
#[derive(Debug, Clone, PartialEq)]
pub struct SceneStats {
    pub alpha: f64,
    pub beta: f64,
    /// Maximum-likelihood Rayleigh scale of heights; `None` when the
    /// scene has no buildings.
    pub gamma: Option<f64>,
}

/// Parameters for the cell-based building generator.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SceneGenConfig {
    /// Region side in meters.
    pub extent: f64,
    /// Side of the placement grid cell; must exceed the largest footprint
    /// dimension so jittered buildings stay inside their own cell.
    pub cell_size: f64,
    /// Probability that a cell receives a building.
    pub p_building: f64,
    /// Uniform range for each footprint dimension, meters.
    pub footprint_range: (f64, f64),
    /// Rayleigh scale for building heights, meters.
    pub gamma: f64,
    /// Height clamp ceiling, meters (floor is fixed at 3 m).
    pub h_max: f64,
}

impl SceneGenConfig {
    /// Minimum generated building height, meters.
    pub const MIN_HEIGHT: f64 = 3.0;

    /// Few low buildings, mostly open ground.
    pub fn sparse() -> Self {
        SceneGenConfig {
            extent: Scene::DEFAULT_EXTENT,
            cell_size: 180.0,
            p_building: 0.15,
            footprint_range: (20.0, 60.0),
            gamma: 8.0,
            h_max: 40.0,
        }
    }

    /// Moderate density, low-rise.
    pub fn suburban() -> Self {
        SceneGenConfig {
            extent: Scene::DEFAULT_EXTENT,
            cell_size: 120.0,
            p_building: 0.55,
            footprint_range: (25.0, 70.0),
            gamma: 12.0,
            h_max: 60.0,
        }
    }

    /// Dense, tall downtown-like layout.
    pub fn dense() -> Self {
        SceneGenConfig {
            extent: Scene::DEFAULT_EXTENT,
            cell_size: 75.0,
            p_building: 0.85,
            footprint_range: (30.0, 60.0),
            gamma: 28.0,
            h_max: 150.0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.extent > 0.0) {
            return Err(Error::Config("extent must be positive".into()));
        }
        if !(self.cell_size > 0.0) {
            return Err(Error::Config("cell_size must be positive".into()));
        }
        let (fp_min, fp_max) = self.footprint_range;
        if !(fp_min > 0.0 && fp_min <= fp_max) {
            return Err(Error::Config(format!(
                "footprint_range ({fp_min}, {fp_max}) must satisfy 0 < min <= max"
            )));
        }
        if self.cell_size <= fp_max {
            return Err(Error::Config(format!(
                "cell_size {} must exceed max footprint dimension {}",
                self.cell_size, fp_max
            )));
        }
        if !(0.0..=1.0).contains(&self.p_building) {
            return Err(Error::Config(format!(
                "p_building {} outside [0, 1]",
                self.p_building
            )));
        }
        if !(self.gamma > 0.0) {
            return Err(Error::Config("gamma must be positive".into()));
        }
        if self.h_max < Self::MIN_HEIGHT {
            return Err(Error::Config(format!(
                "h_max {} below minimum height {}",
                self.h_max,
                Self::MIN_HEIGHT
            )));
        }
        Ok(())
    }
}

/// Generate a scene: at most one building per grid cell, jittered within
/// the cell, footprint dimensions uniform in `footprint_range`, heights
/// Rayleigh(`gamma`) clamped to `[3, h_max]`.
///
/// Deterministic for a fixed `(config, seed)` pair. Cell-local jitter
/// guarantees the non-overlap and containment invariants by construction.
pub fn generate_scene(config: &SceneGenConfig, seed: u64) -> Result<Scene> {
    config.validate()?;
    let cells = (config.extent / config.cell_size).floor() as usize;
    let (fp_min, fp_max) = config.footprint_range;
    let mut rng = rng_from(seed);
    let mut buildings = Vec::new();
    for ci in 0..cells {
        for cj in 0..cells {
            if rng.gen::<f64>() >= config.p_building {
                continue;
            }
            let w = rng.gen_range(fp_min..=fp_max);
            let l = rng.gen_range(fp_min..=fp_max);
            // Inverse-CDF Rayleigh sample; u in [0,1) keeps ln(1-u) finite.
            let u: f64 = rng.gen();
            let h = (config.gamma * (-2.0 * (1.0 - u).ln()).sqrt())
                .clamp(SceneGenConfig::MIN_HEIGHT, config.h_max);
            let x0 = ci as f64 * config.cell_size + rng.gen_range(0.0..config.cell_size - w);
            let y0 = cj as f64 * config.cell_size + rng.gen_range(0.0..config.cell_size - l);
            buildings.push(Building {
                x_min: x0,
                y_min: y0,
                x_max: x0 + w,
                y_max: y0 + l,
                height: h,
            });
        }
    }
    Ok(Scene { extent: config.extent, seed, buildings })
}

/// Compute `SceneStats`: alpha is built area over total area, beta is
/// buildings per km^2, gamma is the Rayleigh MLE `sqrt(sum(h^2) / 2n)`.
pub fn scene_stats(scene: &Scene) -> SceneStats {
    let total = scene.extent * scene.extent;
    let built: f64 = scene.buildings.iter().map(Building::footprint_area).sum();
    let km2 = (scene.extent / 1000.0).powi(2);
    let n = scene.buildings.len();
    let gamma = if n == 0 {
        None
    } else {
        let sum_sq: f64 = scene.buildings.iter().map(|b| b.height * b.height).sum();
        Some((sum_sq / (2.0 * n as f64)).sqrt())
    };
    SceneStats { alpha: built / total, beta: n as f64 / km2, gamma }
}

/// Uniform n-by-n receiver grid at `rx_height` meters above ground, with
/// the indoor mask from a point-in-footprint test.
#[derive(Debug, Clone, PartialEq)]
pub struct ReceiverGrid {
    pub n: usize,
    pub extent: f64,
    pub rx_height: f64,
    /// Row-major over (i, j): index `i * n + j`, position
    /// `((i+0.5) extent/n, (j+0.5) extent/n, rx_height)`.
    pub positions: Vec<(f64, f64, f64)>,
    pub indoor: Vec<bool>,
}

impl ReceiverGrid {
    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn outdoor_count(&self) -> usize {
        self.indoor.iter().filter(|&&v| !v).count()
    }
}

/// Place the receiver grid for a scene. `n` must be at least 2.
pub fn receiver_grid(scene: &Scene, n: usize, rx_height: f64) -> ReceiverGrid {
    assert!(n >= 2, "receiver grid needs n >= 2, got {n}");
    let step = scene.extent / n as f64;
    let mut positions = Vec::with_capacity(n * n);
    let mut indoor = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let x = (i as f64 + 0.5) * step;
            let y = (j as f64 + 0.5) * step;
            positions.push((x, y, rx_height));
            indoor.push(scene.buildings.iter().any(|b| b.contains_xy(x, y)));
        }
    }
    ReceiverGrid { n, extent: scene.extent, rx_height, positions, indoor }
}

/// Top-down multi-channel image of a scene, channel-major row-major,
/// values in [0, 1]. Stored as f32 to match the on-disk raster format.
#[derive(Debug, Clone, PartialEq)]
pub struct RasterImage {
    pub channels: usize,
    pub height: usize,
    pub width: usize,
    pub data: Vec<f32>,
}

impl RasterImage {
    /// Default image side in pixels.
    pub const DEFAULT_SIZE: usize = 224;
    /// Channels: occupancy, normalized height, reserved.
    pub const CHANNELS: usize = 3;

    pub fn at(&self, c: usize, y: usize, x: usize) -> f32 {
        self.data[(c * self.height + y) * self.width + x]
    }
}

/// Rasterize a scene by sampling at pixel centers: channel 0 is footprint
/// occupancy (0/1), channel 1 is building height over `h_max`, channel 2
/// is reserved (zero). Pixel (y, x) samples the scene point
/// `((x+0.5) extent/width, (y+0.5) extent/height)`.
pub fn rasterize(scene: &Scene, height: usize, width: usize, h_max: f64) -> Result<RasterImage> {
    let tallest = scene.max_height();
    if h_max < tallest {
        return Err(Error::Config(format!(
            "h_max {h_max} below tallest building {tallest}"
        )));
    }
    let mut data = vec![0.0f32; RasterImage::CHANNELS * height * width];
    let plane = height * width;
    for b in &scene.buildings {
        // Pixel centers covered by [min, max]: (p+0.5)*extent/n in range.
        let x_lo = ((b.x_min * width as f64 / scene.extent) - 0.5).ceil().max(0.0) as usize;
        let x_hi = ((b.x_max * width as f64 / scene.extent) - 0.5).floor().min(width as f64 - 1.0);
        let y_lo = ((b.y_min * height as f64 / scene.extent) - 0.5).ceil().max(0.0) as usize;
        let y_hi = ((b.y_max * height as f64 / scene.extent) - 0.5).floor().min(height as f64 - 1.0);
        if x_hi < 0.0 || y_hi < 0.0 {
            continue;
        }
        let level = (b.height / h_max) as f32;
        for y in y_lo..=y_hi as usize {
            for x in x_lo..=x_hi as usize {
                // Bounding ranges above are conservative only through
                // floating rounding; re-test the actual pixel center.
                let cx = (x as f64 + 0.5) * scene.extent / width as f64;
                let cy = (y as f64 + 0.5) * scene.extent / height as f64;
                if b.contains_xy(cx, cy) {
                    data[y * width + x] = 1.0;
                    data[plane + y * width + x] = level;
                }
            }
        }
    }
    Ok(RasterImage { channels: RasterImage::CHANNELS, height, width, data })
}
