from setuptools import setup, find_packages
import os

def main():
    setup(
        name='roto-center',
        version='1.0.0',
        description="closed-form coordinate optimizers (Rotosolve, Rotoselect) for variational quantum circuits",
        author="RotoCenter Authors",
        packages=find_packages(exclude=["tests"]),
        package_data={"roto_center": ["data/hamiltonians/*.txt"]},
        install_requires=[
            "torch>=1.10",
            "numpy",
            "tqdm",
        ],
        extras_require={
            "test": ["pytest"],
        },
        entry_points={
            "console_scripts": ["roto-center=roto_center.cli:main"],
        },
        keywords="VQE, quantum circuit, Rotosolve, Rotoselect, optimization",
        license='Apache 2.0',
    )

if __name__ == '__main__':
    main()
