#!/usr/bin/env python3
"""
Setup script for the almost Mathieu spectra toolkit v1.0.1.

This script writes the .env file with output, threading and logging settings
and runs a quick self-test.
"""

# Version information
__version__ = "1.0.1"
__release_date__ = "2026-10-19"

import os
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent / "src"))


def print_version_info():
    """Print version and feature summary."""
    print(f"🚀 amspec: Almost Mathieu Spectra Toolkit v{__version__}")
    print(f"📅 Release Date: {__release_date__}")
    print("=" * 60)
    print("🎯 Included in v1.0.1:")
    print("  ✅ Exact interval unions, thickness and Minkowski sums")
    print("  🔧 Newhouse / Astels Gap Lemma checks with an exact oracle")
    print("  📊 Rational and convergent spectra, butterfly datasets")
    print("  🛠️  IDS, gap labels, Diophantine constants and threshold sweeps")
    print("=" * 60)
    print()


def create_env_file():
    """Create .env file interactively."""
    env_path = Path(".env")

    if env_path.exists():
        overwrite = input("⚠️  .env file already exists. Overwrite? (y/N): ").lower()
        if overwrite != 'y':
            print("Setup cancelled.")
            return

    print("\n📝 Please provide the following information:")

    print("\n📂 Output Configuration:")
    output_dir = input("Output folder (default: results/): ").strip() or "results/"

    print("\n⚙️  Runtime Configuration:")
    threads = input(f"Worker threads (default: {os.cpu_count() or 1}): ").strip() or str(os.cpu_count() or 1)
    log_level = input("Log level (default: INFO): ").strip().upper() or "INFO"
    gap_scale = input("Gap-closing scale (default: 1e-9): ").strip() or "1e-9"

    env_content = f"""# Output Configuration
AMSPEC_OUTPUT_DIR={output_dir}

# Runtime Configuration
AMSPEC_THREADS={threads}
AMSPEC_LOG_LEVEL={log_level}
AMSPEC_GAP_CLOSE_SCALE={gap_scale}
"""

    with open(env_path, 'w', encoding='utf-8') as f:
        f.write(env_content)

    print(f"\n✅ Configuration saved to {env_path.absolute()}")
    print("\n🎉 Setup complete! Try: python spectra.py spectrum --lambda 0.5 --freq \"[0;(1)]\"")


def test_configuration():
    """Smoke-test imports, configuration and one small spectrum."""
    try:
        from amspec.amo import spectrum_rational
        from amspec.dioph import Rational
        from amspec.sets import middle_thirds, thickness
        from amspec.utils.config import RunConfig

        print("✅ All imports successful")

        config = RunConfig.from_env()
        print(f"✅ Configuration loaded: output={config.output_folder}, threads={config.threads}")

        tau = thickness(middle_thirds(6)).tau
        print(f"✅ Middle-thirds thickness: {tau}")

        result = spectrum_rational(0.5, Rational(1, 2))
        print(f"✅ Spectrum λ=0.5, α=1/2: {result.union.pairs()}")

        print("\n🎉 All tests passed! System is ready to use.")

    except Exception as e:
        print(f"❌ Test failed: {e}")
        print("\nPlease check your installation and try again.")


def main():
    """Main setup function."""
    print_version_info()
    if len(sys.argv) > 1 and sys.argv[1] == "test":
        test_configuration()
    else:
        create_env_file()


if __name__ == "__main__":
    main()
