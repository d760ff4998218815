//! Configuration for feature extraction, model dimensions and training.
//!
//! Configs load from a TOML file with one section per area (`[audio]`,
//! `[model]`, `[training]`); every key falls back to its default so a
//! partial file is fine. CLI flags override file values.

use serde::{Deserialize, Serialize};
use std::path::Path;

use crate::error::{Error, Result};

/// Signal-analysis parameters shared by training and evaluation.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default)]
pub struct AudioConfig {
    pub sample_rate: u32,
    pub fft_size: usize,
    pub win_size: usize,
    pub hop_size: usize,
    pub mel_bins: usize,
    pub fmin: f32,
    pub fmax: f32,
    /// F0 search range and voicing threshold for the pitch tracker.
    pub f0_min: f32,
    pub f0_max: f32,
    pub voicing_threshold: f32,
}

impl Default for AudioConfig {
    fn default() -> Self {
        Self {
            sample_rate: 22050,
            fft_size: 1024,
            win_size: 1024,
            hop_size: 256,
            mel_bins: 80,
            fmin: 0.0,
            fmax: 8000.0,
            f0_min: 60.0,
            f0_max: 500.0,
            voicing_threshold: 0.3,
        }
    }
}

impl AudioConfig {
    pub fn n_freq_bins(&self) -> usize {
        self.fft_size / 2 + 1
    }

    pub fn validate(&self) -> Result<()> {
        if self.fft_size < self.win_size {
            return Err(Error::config(format!(
                "fft_size {} must be >= win_size {}",
                self.fft_size, self.win_size
            )));
        }
        if self.hop_size == 0 || self.fft_size == 0 {
            return Err(Error::config("hop_size and fft_size must be positive"));
        }
        if self.f0_min <= 0.0 || self.f0_max <= self.f0_min {
            return Err(Error::config("need 0 < f0_min < f0_max"));
        }
        Ok(())
    }
}

/// Architecture hyperparameters. Defaults are sized for CPU training.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default)]
pub struct ModelConfig {
    pub phoneme_vocab: usize,
    pub n_styles: usize,
    pub d_model: usize,
    pub d_latent: usize,
    pub d_style: usize,
    pub attn_heads: usize,
    /// SwishRNN Transformer blocks in the phoneme-level encoder.
    pub phoneme_blocks: usize,
    /// Convolutional Transformer + SAIN blocks in the frame-level encoder.
    pub frame_blocks: usize,
    pub frame_kernel: usize,
    pub pitch_bins: usize,
    pub pitch_range_bins: usize,
    pub pitch_range_max: f32,
    pub flow_layers: usize,
    pub flow_wn_layers: usize,
    pub flow_wn_hidden: usize,
    pub flow_kernel: usize,
    /// Affine coupling with tanh-bounded log-scale; mean-only when false.
    pub flow_affine: bool,
    /// Feed the frame-level condition into the flow's conditioners.
    pub flow_condition_on_frames: bool,
    pub posterior_wn_layers: usize,
    pub posterior_hidden: usize,
    pub posterior_kernel: usize,
    pub upsample_rates: Vec<usize>,
    pub initial_channels: usize,
    pub amp_kernels: Vec<usize>,
    pub amp_dilations: Vec<usize>,
    pub snake_alpha_init: f32,
    pub lowpass_taps: usize,
    pub lowpass_beta: f64,
    pub mpd_periods: Vec<usize>,
    /// (fft_size, hop_size, win_size) triples for the multi-resolution
    /// discriminator.
    pub mrd_resolutions: Vec<(usize, usize, usize)>,
    pub variance_kernel: usize,
    pub variance_hidden: usize,
    pub variance_dropout: f32,
}

impl Default for ModelConfig {
    fn default() -> Self {
        Self {
            phoneme_vocab: 32,
            n_styles: 4,
            d_model: 192,
            d_latent: 192,
            d_style: 64,
            attn_heads: 2,
            phoneme_blocks: 4,
            frame_blocks: 4,
            frame_kernel: 5,
            pitch_bins: 64,
            pitch_range_bins: 32,
            pitch_range_max: 200.0,
            flow_layers: 4,
            flow_wn_layers: 4,
            flow_wn_hidden: 96,
            flow_kernel: 5,
            flow_affine: false,
            flow_condition_on_frames: true,
            posterior_wn_layers: 16,
            posterior_hidden: 192,
            posterior_kernel: 5,
            upsample_rates: vec![8, 8, 2, 2],
            initial_channels: 256,
            amp_kernels: vec![3, 7, 11],
            amp_dilations: vec![1, 3, 5],
            snake_alpha_init: 1.0,
            lowpass_taps: 12,
            lowpass_beta: 9.0,
            mpd_periods: vec![2, 3, 5, 7, 11],
            mrd_resolutions: vec![(512, 50, 240), (1024, 120, 600), (2048, 240, 1200)],
            variance_kernel: 3,
            variance_hidden: 192,
            variance_dropout: 0.1,
        }
    }
}

impl ModelConfig {
    pub fn upsample_factor(&self) -> usize {
        self.upsample_rates.iter().product()
    }

    pub fn validate(&self, audio: &AudioConfig) -> Result<()> {
        if self.upsample_factor() != audio.hop_size {
            return Err(Error::config(format!(
                "product of upsample_rates ({}) must equal hop_size ({})",
                self.upsample_factor(),
                audio.hop_size
            )));
        }
        if self.d_latent % 2 != 0 {
            return Err(Error::config("d_latent must be even for coupling layers"));
        }
        if self.d_model % self.attn_heads != 0 {
            return Err(Error::config("d_model must be divisible by attn_heads"));
        }
        if self.n_styles < 2 {
            return Err(Error::config("need at least 2 styles"));
        }
        let ch = self.initial_channels;
        if ch >> self.upsample_rates.len() == 0 {
            return Err(Error::config("initial_channels too small for the upsampling chain"));
        }
        Ok(())
    }
}

/// Optimization and loop parameters.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default)]
pub struct TrainingConfig {
    pub lambda_fm: f64,
    pub lambda_mel: f64,
    pub kl_weight: f64,
    pub learning_rate: f64,
    pub adam_beta1: f64,
    pub adam_beta2: f64,
    pub adam_eps: f64,
    /// Exponential learning-rate decay applied every step.
    pub lr_decay: f64,
    pub batch_size: usize,
    pub segment_frames: usize,
    pub total_steps: u64,
    pub checkpoint_interval: u64,
    pub seed: u64,
}

impl Default for TrainingConfig {
    fn default() -> Self {
        Self {
            lambda_fm: 2.0,
            lambda_mel: 45.0,
            kl_weight: 1.0,
            learning_rate: 2e-4,
            adam_beta1: 0.8,
            adam_beta2: 0.99,
            adam_eps: 1e-9,
            lr_decay: 0.999875,
            batch_size: 1,
            segment_frames: 32,
            total_steps: 1000,
            checkpoint_interval: 500,
            seed: 1234,
        }
    }
}

impl TrainingConfig {
    pub fn validate(&self) -> Result<()> {
        if self.lambda_fm <= 0.0 || self.lambda_mel <= 0.0 {
            return Err(Error::config("lambda_fm and lambda_mel must be positive"));
        }
        if self.segment_frames < 8 {
            return Err(Error::config("segment_frames must be >= 8"));
        }
        if self.batch_size == 0 {
            return Err(Error::config("batch_size must be positive"));
        }
        Ok(())
    }
}

/// Top-level config bundle as stored in a config file.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(default)]
pub struct Config {
    pub audio: AudioConfig,
    pub model: ModelConfig,
    pub training: TrainingConfig,
}

impl Config {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        let cfg: Config =
            toml::from_str(&text).map_err(|e| Error::config(format!("{}: {e}", path.display())))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        self.audio.validate()?;
        self.model.validate(&self.audio)?;
        self.training.validate()
    }

    /// Stable 64-bit hash of the whole config; stored in checkpoints so a
    /// resume against a different config is rejected.
    pub fn hash(&self) -> u64 {
        let json = serde_json::to_string(self).expect("config serializes");
        fnv1a(json.as_bytes())
    }
}

fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x100_0000_01b3);
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_consistent() {
        let cfg = Config::default();
        cfg.validate().unwrap();
        assert_eq!(cfg.model.upsample_factor(), cfg.audio.hop_size as usize);
    }

    #[test]
    fn hash_changes_with_config() {
        let a = Config::default();
        let mut b = Config::default();
        b.training.seed = 999;
        assert_ne!(a.hash(), b.hash());
        assert_eq!(a.hash(), Config::default().hash());
    }

    #[test]
    fn mismatched_upsampling_is_rejected() {
        let mut cfg = Config::default();
        cfg.model.upsample_rates = vec![8, 8, 2];
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn partial_toml_fills_defaults() {
        let cfg: Config = toml::from_str("[training]\nseed = 7\n").unwrap();
        assert_eq!(cfg.training.seed, 7);
        assert_eq!(cfg.audio.sample_rate, 22050);
    }
}
