//! Deterministic signal analysis: STFT, mel spectrograms and F0 tracking.
//!
//! All analyses share one frame grid: frames are centered at `t * hop_size`
//! for `t = 0..n_frames`, with `n_frames = floor(len / hop_size) + 1`, and
//! read from a reflect-padded copy of the signal.

mod mel;
mod pitch;
mod stft;

pub use mel::{compute_mel_spectrogram, mel_filterbank, MelSpectrogram};
pub use pitch::{extract_f0, phoneme_level_targets, PitchTrack};
pub use stft::{compute_linear_spectrogram, hann_window, LinearSpectrogram};

/// Frame count on the shared analysis grid.
pub fn n_frames(signal_len: usize, hop_size: usize) -> usize {
    signal_len / hop_size + 1
}

/// Extracts a window of `width` samples centered at `center`, reflecting at
/// the signal edges.
pub(crate) fn reflect_frame(signal: &[f32], center: isize, width: usize) -> Vec<f32> {
    let n = signal.len() as isize;
    let start = center - (width as isize) / 2;
    (0..width as isize)
        .map(|i| {
            let mut idx = start + i;
            // Fold until inside; each fold shrinks the excursion.
            loop {
                if idx < 0 {
                    idx = -idx;
                } else if idx >= n {
                    idx = 2 * n - 2 - idx;
                } else {
                    break;
                }
                if n == 1 {
                    idx = 0;
                    break;
                }
            }
            signal[idx as usize]
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reflect_frame_matches_manual_padding() {
        let x = [1.0f32, 2.0, 3.0, 4.0, 5.0];
        // Window of 5 centered at 0: indices -2..=2 reflect to [3,2,1,2,3].
        assert_eq!(reflect_frame(&x, 0, 5), vec![3.0, 2.0, 1.0, 2.0, 3.0]);
        // Centered at the last sample: indices 2..=6 -> [3,4,5,4,3].
        assert_eq!(reflect_frame(&x, 4, 5), vec![3.0, 4.0, 5.0, 4.0, 3.0]);
        // Interior window is a plain copy.
        assert_eq!(reflect_frame(&x, 2, 3), vec![2.0, 3.0, 4.0]);
    }

    #[test]
    fn frame_count_convention() {
        assert_eq!(n_frames(256 * 10, 256), 11);
        assert_eq!(n_frames(256 * 10 - 1, 256), 10);
        assert_eq!(n_frames(0, 256), 1);
    }
}
