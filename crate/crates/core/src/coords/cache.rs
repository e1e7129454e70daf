//! Binary table cache files.
//!
//! Layout (little-endian): 4-byte magic, version byte, section count (u32),
//! one u64 length per section, crc32 of the payload, then the payload.

use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use crate::error::{Error, Result};

pub const CACHE_ENV: &str = "COSETCUBE_CACHE_DIR";

static OVERRIDE: Mutex<Option<PathBuf>> = Mutex::new(None);

/// Use `dir` for table caches from now on (takes precedence over the
/// environment variable).
pub fn set_dir(dir: impl Into<PathBuf>) {
    *OVERRIDE.lock().unwrap() = Some(dir.into());
}

/// The cache directory: explicit override, else `$COSETCUBE_CACHE_DIR`, else a
/// directory under the system temp dir.
pub fn dir() -> PathBuf {
    if let Some(d) = OVERRIDE.lock().unwrap().clone() {
        return d;
    }
    match std::env::var_os(CACHE_ENV) {
        Some(d) if !d.is_empty() => PathBuf::from(d),
        _ => std::env::temp_dir().join("cosetcube-cache"),
    }
}

pub fn save(path: &Path, magic: &[u8; 4], version: u8, sections: &[&[u8]]) -> Result<()> {
    if let Some(parent) = path.parent() {
        fs::create_dir_all(parent)?;
    }
    let mut crc = crc32fast::Hasher::new();
    for s in sections {
        crc.update(s);
    }
    // Write beside the target and rename, so concurrent readers never see a
    // partial file.
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    {
        let mut f = std::io::BufWriter::new(fs::File::create(&tmp)?);
        f.write_all(magic)?;
        f.write_all(&[version])?;
        f.write_all(&(sections.len() as u32).to_le_bytes())?;
        for s in sections {
            f.write_all(&(s.len() as u64).to_le_bytes())?;
        }
        f.write_all(&crc.finalize().to_le_bytes())?;
        for s in sections {
            f.write_all(s)?;
        }
        f.flush()?;
    }
    fs::rename(&tmp, path)?;
    Ok(())
}

/// Load a file written by [`save`], checking magic, version, section sizes and
/// checksum. `expected` gives the required byte length of each section.
pub fn load(path: &Path, magic: &[u8; 4], version: u8, expected: &[u64]) -> Result<Vec<Vec<u8>>> {
    let mut f = std::io::BufReader::new(fs::File::open(path)?);
    let mut head = [0u8; 9];
    f.read_exact(&mut head)
        .map_err(|_| Error::Format(format!("{}: truncated header", path.display())))?;
    if &head[..4] != magic {
        return Err(Error::Format(format!("{}: wrong magic", path.display())));
    }
    if head[4] != version {
        return Err(Error::Format(format!(
            "{}: version {} (expected {version})",
            path.display(),
            head[4]
        )));
    }
    let n = u32::from_le_bytes(head[5..9].try_into().unwrap()) as usize;
    if n != expected.len() {
        return Err(Error::Format(format!("{}: {n} sections", path.display())));
    }
    let mut lens = Vec::with_capacity(n);
    for &want in expected {
        let mut b = [0u8; 8];
        f.read_exact(&mut b)?;
        let len = u64::from_le_bytes(b);
        if len != want {
            return Err(Error::Format(format!(
                "{}: section size {len} (expected {want})",
                path.display()
            )));
        }
        lens.push(len as usize);
    }
    let mut b = [0u8; 4];
    f.read_exact(&mut b)?;
    let stored = u32::from_le_bytes(b);
    let mut crc = crc32fast::Hasher::new();
    let mut out = Vec::with_capacity(n);
    for len in lens {
        let mut s = vec![0u8; len];
        f.read_exact(&mut s)
            .map_err(|_| Error::Format(format!("{}: truncated payload", path.display())))?;
        crc.update(&s);
        out.push(s);
    }
    if crc.finalize() != stored {
        return Err(Error::Format(format!(
            "{}: checksum mismatch",
            path.display()
        )));
    }
    Ok(out)
}

pub fn u16s_to_bytes(v: &[u16]) -> Vec<u8> {
    v.iter().flat_map(|x| x.to_le_bytes()).collect()
}

pub fn u32s_to_bytes(v: &[u32]) -> Vec<u8> {
    v.iter().flat_map(|x| x.to_le_bytes()).collect()
}

pub fn bytes_to_u16s(b: &[u8]) -> Vec<u16> {
    b.chunks_exact(2)
        .map(|c| u16::from_le_bytes([c[0], c[1]]))
        .collect()
}

pub fn bytes_to_u32s(b: &[u8]) -> Vec<u32> {
    b.chunks_exact(4)
        .map(|c| u32::from_le_bytes([c[0], c[1], c[2], c[3]]))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_and_corruption() {
        let d = std::env::temp_dir().join(format!("cosetcube-cache-test-{}", std::process::id()));
        let p = d.join("t.bin");
        let a = u32s_to_bytes(&[1, 2, 3]);
        let b = vec![9u8; 5];
        save(&p, b"TEST", 1, &[&a, &b]).unwrap();
        let got = load(&p, b"TEST", 1, &[12, 5]).unwrap();
        assert_eq!(bytes_to_u32s(&got[0]), vec![1, 2, 3]);
        assert_eq!(got[1], b);
        assert!(load(&p, b"NOPE", 1, &[12, 5]).is_err());
        assert!(load(&p, b"TEST", 2, &[12, 5]).is_err());
        assert!(load(&p, b"TEST", 1, &[12, 4]).is_err());
        let mut raw = fs::read(&p).unwrap();
        let last = raw.len() - 1;
        raw[last] ^= 1;
        fs::write(&p, &raw).unwrap();
        assert!(matches!(
            load(&p, b"TEST", 1, &[12, 5]),
            Err(Error::Format(_))
        ));
        raw.truncate(last);
        fs::write(&p, &raw).unwrap();
        assert!(load(&p, b"TEST", 1, &[12, 5]).is_err());
        fs::remove_dir_all(&d).unwrap();
    }
}
