# setup.py
from setuptools import setup, find_packages

# Read the contents of requirements.txt
with open('requirements.txt') as f:
    required = [line for line in f.read().splitlines() if line and not line.startswith('#')]

setup(
    name='liteseries',
    version='0.1.0',
    packages=find_packages(include=['liteseries*']),
    py_modules=['liteseries_main'],
    long_description=open('README.md').read(),
    long_description_content_type='text/markdown',
    include_package_data=True,
    python_requires='>=3.9',
    install_requires=required,
    extras_require={'test': ['pytest>=7.4']},
)
