from dualdeg.version import __version__
