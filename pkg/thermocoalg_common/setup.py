from setuptools import setup

setup(
    name='thermocoalg_common',
    version='0.1.0',
    description='Truncated Fock-space algebra and shared tools for thermocoalg',
    packages=['thermocoalg_common', 'thermocoalg_common.core', 'thermocoalg_common.tools'],
    package_dir={'': 'src'},
    install_requires=['numpy', 'scipy', 'wrapt'],
)
