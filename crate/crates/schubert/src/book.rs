// book doctest harness placeholder
