"""
Directed paths on the surface of a cube
=======================================

Executions of three independent actions with the joint state forbidden:
the solid cube minus its interior.  Directed paths from the bottom corner
to the top corner form a circle up to homotopy.
"""

from cubehom.ingest import GridSpec, generate_grid_complex
from cubehom.chains import chain_type
from cubehom.pipeline import path_space_model

cset, source, target = generate_grid_complex(GridSpec((1, 1, 1), forbidden=[(0, 0, 0)]))
print("cubes per dimension:", cset.grading())

model = path_space_model(cset, source, target)

# each cell of the model is a cube chain; its type lists the cube dimensions
for chain in model.poset.elements:
    print(chain_type(cset, chain), " ".join(chain))

# six vertex chains, six chains through a face; the boundary matrix has rank 5
print(model.complex.counts())
print(model.total)
