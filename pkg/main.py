# main.py
import sys

from hecke_spectra.cli.job_runner import main_cli


if __name__ == "__main__":
    sys.exit(main_cli())
