from schubsat.cli import main

main()
