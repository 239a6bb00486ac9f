from setuptools import setup

setup(
    name='thermocoalg_tfd',
    version='0.1.0',
    description='Thermo field dynamics on truncated Fock spaces: doubling, thermal vacua, qubit, Fibonacci tree',
    packages=['thermocoalg_tfd', 'thermocoalg_tfd.core'],
    package_dir={'': 'src'},
    install_requires=['numpy', 'scipy', 'thermocoalg_common'],
)
