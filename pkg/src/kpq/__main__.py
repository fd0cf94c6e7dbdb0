from kpq.cli import main

main()
