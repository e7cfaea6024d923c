#!/usr/bin/env python3
"""
Configuration checker for the almost Mathieu spectra toolkit.

This script detects and validates the existing environment configuration.
"""

import os
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent / "src"))

ENV_KEYS = ("AMSPEC_OUTPUT_DIR", "AMSPEC_THREADS", "AMSPEC_LOG_LEVEL", "AMSPEC_GAP_CLOSE_SCALE")


def check_configuration():
    """Check if the toolkit is configured and importable."""

    print("🔍 Checking system configuration...")

    config_found = False

    for key in ENV_KEYS:
        if os.getenv(key):
            print(f"✅ {key} found in environment variables")
            config_found = True

    env_file = Path(".env")
    if env_file.exists():
        print("✅ .env file found")
        config_found = True
        try:
            content = env_file.read_text(encoding='utf-8')
            for key in ENV_KEYS:
                if f"{key}=" in content:
                    print(f"✅ {key} set in .env file")
        except OSError:
            pass

    try:
        from amspec.utils.config import RunConfig
        config = RunConfig.from_env()
        print(f"✅ Run configuration: output={config.output_folder}, threads={config.threads}, "
              f"log level={config.log_level}")
    except Exception as e:
        print(f"⚠️  Import test failed: {e}")
        return False

    if config_found:
        print("\n🎉 System is already configured and ready to use!")
    else:
        print("\nℹ️  No configuration found; defaults apply (results/, 1 thread, INFO).")
    print("\n💡 Usage:")
    print("   python spectra.py --help                 # Command overview")
    print("   python spectra.py pipeline --config c.json  # Sum-of-spectra experiment")
    return True


def main():
    """Main function."""
    if check_configuration():
        if len(sys.argv) > 1 and sys.argv[1] == "--test":
            print("\n🧪 Running system test...")
            try:
                from amspec.dioph import GOLDEN_MEAN, dc_constants
                report = dc_constants(GOLDEN_MEAN, 2.0, 1000)
                print(f"✅ Diophantine scan passed: c_best = {report.c_best:.6f}")
                print("🎉 System is working correctly!")
            except Exception as e:
                print(f"❌ Test failed: {e}")
        else:
            print("\n💡 To run a system test: python check_config.py --test")
    else:
        print("Run: python setup.py")


if __name__ == "__main__":
    main()
