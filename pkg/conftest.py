import sys
import os

# Add the src directory to the Python path so that 'import hecke_spectra' works
# without installing the package.
sys.path.insert(0, os.path.join(os.path.abspath(os.path.dirname(__file__)), "src"))
