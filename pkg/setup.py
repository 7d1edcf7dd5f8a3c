import setuptools
from pathlib import Path


readme_path = Path(__file__).parent / 'README.md'
long_description = readme_path.read_text()


setuptools.setup(
    name='schubstone',
    version='0.0.1',
    author='Gilad Ben Dov',
    description='Exact Schubert calculus: Schubert polynomial products, stable Stanley expansions and MT-trees.',
    long_description=long_description,
    long_description_content_type='text/markdown',
    packages=setuptools.find_packages(include=['schubstone*']),
    entry_points = {
        'console_scripts' : [
            'schubcalc=schubstone.tools.schubcalc:main'
        ]
    },
    python_requires='>=3.8',
    install_requires=[
        'sympy',
        'networkx'
    ],
    extras_require={
        'test': [
            'pytest',
            'pytest-cov',
            'pydot'
        ]
    },
    classifiers=[
        'Programming Language :: Python :: 3',
        'License :: OSI Approved :: MIT License',
        'Operating System :: OS Independent'
    ]
)
