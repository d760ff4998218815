//! Mono 16-bit PCM WAV reading and writing.

use std::path::Path;

use crate::error::{Error, Result};

/// Reads a mono 16-bit PCM WAV file into normalized f32 samples.
pub fn read_wav(path: &Path) -> Result<(Vec<f32>, u32)> {
    let mut reader = hound::WavReader::open(path)?;
    let spec = reader.spec();
    if spec.channels != 1 {
        return Err(Error::invalid(format!(
            "{}: expected mono audio, got {} channels",
            path.display(),
            spec.channels
        )));
    }
    if spec.bits_per_sample != 16 || spec.sample_format != hound::SampleFormat::Int {
        return Err(Error::invalid(format!(
            "{}: expected 16-bit integer PCM",
            path.display()
        )));
    }
    let samples: std::result::Result<Vec<i16>, _> = reader.samples::<i16>().collect();
    let samples = samples?;
    let scaled = samples.iter().map(|&s| s as f32 / 32768.0).collect();
    Ok((scaled, spec.sample_rate))
}

/// Writes normalized f32 samples as mono 16-bit PCM, clipping at +/-0.999.
pub fn write_wav(path: &Path, samples: &[f32], sample_rate: u32) -> Result<()> {
    let spec = hound::WavSpec {
        channels: 1,
        sample_rate,
        bits_per_sample: 16,
        sample_format: hound::SampleFormat::Int,
    };
    let mut writer = hound::WavWriter::create(path, spec)?;
    for &s in samples {
        let clipped = s.clamp(-0.999, 0.999);
        writer.write_sample((clipped * 32767.0).round() as i16)?;
    }
    writer.finalize()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wav_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("t.wav");
        let samples: Vec<f32> = (0..1000).map(|i| (i as f32 * 0.01).sin() * 0.5).collect();
        write_wav(&path, &samples, 22050).unwrap();
        let (back, sr) = read_wav(&path).unwrap();
        assert_eq!(sr, 22050);
        assert_eq!(back.len(), samples.len());
        for (a, b) in samples.iter().zip(back.iter()) {
            assert!((a - b).abs() < 1.0 / 32000.0);
        }
    }

    #[test]
    fn clipping_is_peak_safe() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.wav");
        write_wav(&path, &[2.0, -2.0, 0.0], 22050).unwrap();
        let (back, _) = read_wav(&path).unwrap();
        assert!(back[0] <= 1.0 && back[0] > 0.99);
        assert!(back[1] >= -1.0 && back[1] < -0.99);
    }
}
