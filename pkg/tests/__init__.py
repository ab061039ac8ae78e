# This file is intentionally empty to make the directory a Python package