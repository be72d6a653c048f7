# Run management package
