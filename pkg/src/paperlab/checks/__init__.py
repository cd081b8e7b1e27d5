"""
Named checks of the replication suite, registered on import.
"""
