"""Graph model, genus pipeline, oracles and generators."""
