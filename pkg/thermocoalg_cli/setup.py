from setuptools import setup

setup(
    name='thermocoalg_cli',
    version='0.1.0',
    description='Command line for the thermo field dynamics and coalgebra experiments',
    packages=['thermocoalg_cli', 'thermocoalg_cli.core'],
    package_dir={'': 'src'},
    scripts=['scripts/thermocoalg'],
    install_requires=['numpy', 'inflection', 'thermocoalg_common', 'thermocoalg_tfd', 'thermocoalg_coalgebra'],
)
