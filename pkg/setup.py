from setuptools import setup

setup(
    name="mahler",
    version="0.1.0",
    author="The mahler developers",
    description="Mahler measures as multiple polylogarithms",
    packages=["mahler", "mahler.utils"],
    package_data={"mahler": ["schemas/*.json"]},
    scripts=["bin/mahler-verify"],
    license="GNU General Public License Version 3",
    install_requires=["PyYAML>=5.1", "jsonschema>=3.0", "statsd>=3.3",
        "numpy>=1.22", "scipy>=1.12", "mpmath>=1.2"],
)
