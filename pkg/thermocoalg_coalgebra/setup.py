from setuptools import setup

setup(
    name='thermocoalg_coalgebra',
    version='0.1.0',
    description='Finite coalgebras: transition systems, colored stream machines, functors and the vacuum foliation',
    packages=['thermocoalg_coalgebra', 'thermocoalg_coalgebra.core'],
    package_dir={'': 'src'},
    install_requires=['thermocoalg_common', 'thermocoalg_tfd'],
)
