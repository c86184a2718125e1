"""Physical constants in Gaussian CGS units.

Fixed CODATA-2018 values compiled into the package so every output is
bit-reproducible. Values quoted to at least 9 significant digits.
"""

# Speed of light [cm/s] (exact)
C_LIGHT = 2.99792458e10

# Electron mass [g]
M_ELECTRON = 9.10938370e-28

# Reduced Planck constant [erg s] (derived from the exact h = 6.62607015e-34 J s)
HBAR = 1.05457182e-27

# Boltzmann constant [erg/K] (exact)
K_BOLTZMANN = 1.380649e-16

# Elementary charge [statC]: exact 1.602176634e-19 C converted via c
E_CHARGE = 4.80320471e-10

# Energy conversion: 1 eV in erg (exact)
ERG_PER_EV = 1.602176634e-12

# Length conversions
CM_PER_NM = 1.0e-7
