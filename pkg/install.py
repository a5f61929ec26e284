"""Set up a virtual environment for triplecover.

Creates ``venv/``, installs ``requirements.txt``, copies the sample
configuration and checks that the CLI starts.
"""
import platform
import shutil
import subprocess
import sys
from pathlib import Path

MIN_PYTHON = (3, 9)
VENV = Path("venv")


def venv_python() -> Path:
    if platform.system() == "Windows":
        return VENV / "Scripts" / "python.exe"
    return VENV / "bin" / "python"


def run(step: str, command) -> bool:
    print(f"{step}...")
    try:
        subprocess.run([str(part) for part in command], check=True)
    except (OSError, subprocess.CalledProcessError) as e:
        print(f"{step} failed: {e}")
        return False
    return True


def create_venv() -> bool:
    if VENV.exists():
        print("Virtual environment already exists")
        return True
    return run("Creating virtual environment", [sys.executable, "-m", "venv", VENV])


def install_requirements() -> bool:
    python = venv_python()
    if not python.exists():
        print(f"{python} not found; remove {VENV}/ and run the installer again")
        return False
    return run("Upgrading pip", [python, "-m", "pip", "install", "--upgrade", "pip"]) and run(
        "Installing requirements", [python, "-m", "pip", "install", "-r", "requirements.txt"]
    )


def create_config_file() -> None:
    target, sample = Path("config.yaml"), Path("config.yaml.sample")
    if target.exists():
        print("config.yaml already exists")
    elif sample.exists():
        shutil.copyfile(sample, target)
        print("Created config.yaml from sample")
    else:
        print("config.yaml.sample not found, built-in defaults will be used")


def smoke_test() -> bool:
    """The installed CLI computes the j-invariant of y^2 - y = x^3."""
    return run("Checking the CLI", [venv_python(), "main.py", "weierstrass", "--field", "Q", "--t", "1"])


def main() -> None:
    print("=" * 60)
    print("triplecover - Installation")
    print("=" * 60)

    if sys.version_info[:2] < MIN_PYTHON:
        print(f"Error: Python {MIN_PYTHON[0]}.{MIN_PYTHON[1]} or newer is required, found {platform.python_version()}")
        sys.exit(1)

    if not (create_venv() and install_requirements()):
        sys.exit(1)
    create_config_file()
    if not smoke_test():
        sys.exit(1)

    print("=" * 60)
    print("Installation completed. Run commands with:")
    print("  ./run.sh --help")


if __name__ == "__main__":
    main()
