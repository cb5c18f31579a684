from setuptools import setup, find_packages

with open("README.md", "r") as fh:
    long_description = fh.read()

setup(
    name='temporank',
    version='0.1.0',
    description='Massey and temporalized Massey ratings for round-based sports seasons, with a backtesting harness',
    long_description=long_description,
    long_description_content_type='text/markdown',
    packages=find_packages(include=['temporank', 'temporank.*']),
    scripts=['bin/temporank'],
    install_requires=[
        "tabulate",
        "numpy",
        "scipy",
    ],
    extras_require={
        "test": ["pytest"],
    },
    classifiers=[
        'Programming Language :: Python :: 3',
        'License :: OSI Approved :: MIT License',
        'Operating System :: OS Independent',
    ]
)
