//! Storing an admissible basis on disk and reading it back.

use hitcore::cache::{Cache, CacheEntry};
use hitcore::hit::{Engine, Policy};

fn main() -> hitcore::Result<()> {
    let dir = std::env::temp_dir().join("hitcore-example-cache");
    let cache = Cache::open(&dir)?;
    let entry = CacheEntry::from_hit_space(&*Engine::default().hit_space(5, 8)?);
    let path = cache.store(&entry)?;
    println!("stored {} monomials at {}", entry.dim(), path.display());
    let back = cache.load(5, 8, Policy::Pow2)?.expect("just stored");
    println!("reloaded, identical: {}, sha256 {}", back == entry, back.hash);
    Ok(())
}
