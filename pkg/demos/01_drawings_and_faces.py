"""Build a 1-plane drawing from straight segments, planarize it and trace its faces."""

from oneplane.core import planarize, trace_faces, unplanarize, validate_drawing
from oneplane.geometry import drawing_from_segments

# a square with both diagonals: the diagonals cross once
points = [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]
edges = [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)]
drawing = drawing_from_segments(points, edges)
print("crossings:", drawing.crossings)
print("valid 1-plane drawing:", validate_drawing(drawing).ok)

p = planarize(drawing)
census = trace_faces(p.graph)
print(f"planarization: {p.graph.n} vertices, {p.graph.m} edges, {len(census.faces)} faces, genus {census.genus}")
print("face lengths:", sorted(census.face_lengths))
print("unplanarize restores the drawing:", unplanarize(p) == drawing.graph)
