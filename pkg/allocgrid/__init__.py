# allocgrid - exact analysis of storage allocations under probabilistic node access
__version__ = "1.0.0"
